#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbs/cuntz.h"
#include "rbs/ket.h"
#include "rbs/report.h"
#include "rbs/scalar.h"

namespace rbs {

/// Boson mode index n of a_n, 1-based.
using Mode = std::uint32_t;
/// mode -> exponent (or occupation count); entries with value 0 are not stored.
using ModePowers = std::map<Mode, std::uint32_t>;
using Occupations = ModePowers;

struct BosonFactor {
  Mode mode = 1;
  bool create = false;

  friend bool operator==(const BosonFactor&, const BosonFactor&) = default;
};

/// coeff * prod (a_n^*)^{k_n} * prod a_m^{l_m}, creators to the left.
struct BosonMonomial {
  RadicalScalar coeff{1L};
  ModePowers creators;
  ModePowers annihilators;

  /// Factor sequence in normal order, creators by ascending mode first.
  std::vector<BosonFactor> factors() const;
  std::uint32_t degree() const;
};

/// Normal-ordered element of the boson algebra.
class BosonPolynomial {
 public:
  using Key = std::pair<ModePowers, ModePowers>;
  using Terms = std::map<Key, RadicalScalar>;

  BosonPolynomial() = default;
  explicit BosonPolynomial(const BosonMonomial& m);

  static BosonPolynomial identity() { return BosonPolynomial(BosonMonomial{}); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<BosonMonomial> monomials() const;

  void add(const BosonMonomial& m);
  BosonPolynomial& operator+=(const BosonPolynomial& other);
  BosonPolynomial& operator-=(const BosonPolynomial& other);

  friend BosonPolynomial operator+(BosonPolynomial a, const BosonPolynomial& b) { return a += b; }
  friend BosonPolynomial operator-(BosonPolynomial a, const BosonPolynomial& b) { return a -= b; }
  /// Product followed by normal ordering.
  friend BosonPolynomial operator*(const BosonPolynomial& a, const BosonPolynomial& b);
  friend bool operator==(const BosonPolynomial&, const BosonPolynomial&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Closed-form a_n on basis labels: letter c at position n becomes c-1 with
/// weight sqrt(c-1); c = 1 is annihilated.
Ket apply_annihilate(Mode n, const Ket& v);
/// Closed-form a_n^*: letter c at position n becomes c+1 with weight sqrt(c).
Ket apply_create(Mode n, const Ket& v);
Ket apply_boson_factor(const BosonFactor& f, const Ket& v);
Ket apply_boson(const BosonMonomial& m, const Ket& v);
Ket apply_boson(const BosonPolynomial& p, const Ket& v);
/// Applies the factors right to left (the last factor acts first).
Ket apply_boson_product(std::span<const BosonFactor> factors, const Ket& v);

/// Rewrites coeff * f_1 f_2 ... f_r into normal order using
/// a_n a_m^* = a_m^* a_n + delta_nm.
BosonPolynomial normal_order(std::span<const BosonFactor> product, const RadicalScalar& coeff = RadicalScalar(1L));

/// Label of a Fock state in P_inf(1): prod (a_n^*)^{k_n} Omega = coefficient * s_word Omega.
struct FockWord {
  RadicalScalar coefficient{1L};
  Word word;
};
FockWord fock_word(const Occupations& occupations);
/// prod (a_n^*)^{k_n} as a monomial with coefficient 1.
BosonMonomial creator_monomial(const Occupations& occupations);

/// Right-hand side of the O_inf action on Fock states: s_m or s_m^* applied
/// to prod (a_n^*)^{k_n} Omega, returned as a creator-only polynomial acting
/// on Omega (zero polynomial when the vector vanishes).
BosonPolynomial fock_extension_action(Letter m, bool star, const Occupations& state);

/// [a_n, a_m^*] = delta_nm, [a_n, a_m] = 0, [a_n^*, a_m^*] = 0 on every sample ket, n, m <= max_mode.
Report check_ccr(std::span<const Ket> samples, Mode max_mode);
/// <a_n u, v> = <u, a_n^* v> on consecutive sample pairs.
Report check_boson_adjointness(std::span<const Ket> samples, Mode max_mode);
/// s_m a_n = a_{n+1} s_m and s_m a_n^* = a_{n+1}^* s_m on samples, plus
/// rho(x) s_i = s_i x for x = a_n, a_n^* with rho evaluated as a truncated sum.
Report check_intertwining(const RepSpec& spec, std::span<const Ket> samples, Mode max_mode, Letter max_generator);
/// Each case of fock_extension_action against direct evaluation in P_inf(1).
Report check_fock_extension(Letter max_generator, std::size_t max_modes_occupied, std::uint32_t max_exponent,
                            Mode max_mode);
/// Creator monomial on Omega of P_inf(1) equals fock_word's coefficient times its word ket.
Report check_fock_dictionary(std::span<const Occupations> samples);

std::string occupations_to_string(const Occupations& occupations);
/// `mode:count` pairs separated by commas; empty text is the vacuum.
Occupations parse_occupations(std::string_view text);

}  // namespace rbs
