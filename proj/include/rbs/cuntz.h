#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbs/ket.h"
#include "rbs/report.h"
#include "rbs/scalar.h"
#include "rbs/words.h"

namespace rbs {

/// Cyclic permutative representation P_N(cycle) of O_N: basis labels are
/// eventually periodic words ending in a rotation of `cycle`, s_i prepends
/// the letter i and s_i* strips a leading i.
class RepSpec {
 public:
  /// Throws DomainError unless the cycle is primitive and inside the alphabet.
  RepSpec(Alphabet alphabet, Word cycle);

  static RepSpec infinite(Word cycle) { return RepSpec(Alphabet::infinite(), std::move(cycle)); }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Word& cycle() const noexcept { return cycle_; }
  /// True when the label's tail is a rotation of the cycle and every letter
  /// lies in the alphabet.
  bool contains(const EPWord& label) const;

  /// `|1,2`, with ` (N=3)` appended for finite alphabets.
  std::string to_string() const;

  friend bool operator==(const RepSpec&, const RepSpec&) = default;

 private:
  Alphabet alphabet_;
  Word cycle_;
};

/// coeff * s_left * (s_right)^*
struct CuntzMonomial {
  RadicalScalar coeff{1L};
  Word left;
  Word right;
};

/// Finite sum of monomials s_J s_K^*, keyed by (J, K).
class CuntzPolynomial {
 public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, RadicalScalar>;

  CuntzPolynomial() = default;
  explicit CuntzPolynomial(const CuntzMonomial& m);

  static CuntzPolynomial identity() { return CuntzPolynomial(CuntzMonomial{}); }
  static CuntzPolynomial generator(Letter i, bool star = false);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<CuntzMonomial> monomials() const;

  void add(const CuntzMonomial& m);
  CuntzPolynomial& operator+=(const CuntzPolynomial& other);
  CuntzPolynomial& operator*=(const RadicalScalar& c);

  friend CuntzPolynomial operator+(CuntzPolynomial a, const CuntzPolynomial& b) { return a += b; }
  friend CuntzPolynomial operator*(const CuntzPolynomial& a, const CuntzPolynomial& b);
  friend bool operator==(const CuntzPolynomial&, const CuntzPolynomial&) = default;

  /// `c s1 s2 s3*` style, terms joined by ` + `.
  std::string to_string() const;

 private:
  Terms terms_;
};

/// (s_J s_K^*)(s_L s_M^*) reduced with s_i^* s_j = delta_ij.
CuntzPolynomial monomial_multiply(const CuntzMonomial& a, const CuntzMonomial& b);
CuntzPolynomial adjoint(const CuntzPolynomial& p);

/// pi(s_i) or pi(s_i^*) on a ket of the representation.
Ket apply_generator(const RepSpec& spec, Letter i, bool star, const Ket& v);
Ket apply_polynomial(const RepSpec& spec, const CuntzPolynomial& p, const Ket& v);
/// GP vector cycle^inf.
Ket gp_vector(const RepSpec& spec);

/// s_i^* s_j v = delta_ij v for i, j <= k and sum_{i<=k} s_i s_i^* v is the
/// orthogonal projection of v (equal to v for k = N finite).
Report check_isometry_relations(const RepSpec& spec, Letter k, std::span<const Ket> sample);

}  // namespace rbs
