#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "rbs/boson.h"
#include "rbs/cuntz.h"
#include "rbs/ket.h"
#include "rbs/report.h"
#include "rbs/words.h"

namespace rbs {

/// Target O_N of the embedding s_{(N-1)(k-1)+i} = t_N^{k-1} t_i.
struct EmbeddingSpec {
  Letter N = 2;

  /// Throws DomainError for N < 2.
  explicit EmbeddingSpec(Letter n);
  /// P_N(1) of O_N.
  RepSpec ambient() const;
};

/// N^{k-1} i with m - 1 = (N-1)(k-1) + (i-1), i in 1..N-1.
Word embed_generator(const EmbeddingSpec& spec, Letter m);
Word translate_word(const EmbeddingSpec& spec, const Word& word);
/// t_1^{n_1-1} t_N^{c_1-1} t_{b_1} ... built from the occupation digits
/// k = (N-1)(c-1) + b - 1, one block per mode up to the largest occupied one.
Word fock_word_in_ON(const EmbeddingSpec& spec, const Occupations& occupations);

/// O_inf acting on a representation of O_N (P_N(1) by default) through the
/// embedding; usable with literal_boson.
class EmbeddedAction {
 public:
  using ket_type = Ket;

  explicit EmbeddedAction(EmbeddingSpec spec) : spec_(spec), ambient_(spec.ambient()) {}
  /// DomainError unless `ambient` is a representation of O_N for this N.
  EmbeddedAction(EmbeddingSpec spec, RepSpec ambient);

  Ket apply_s(Letter m, bool star, const Ket& v) const;
  /// (N-1)(r+1) for a label starting with r copies of N, 0 for N^inf.
  Letter leading_index_bound(const EPWord& label) const;
  const RepSpec& ambient() const noexcept { return ambient_; }

 private:
  EmbeddingSpec spec_;
  RepSpec ambient_;
};

/// Basis vector e_index of l^2(N).
struct OdometerLabel {
  std::uint64_t index = 1;

  friend auto operator<=>(const OdometerLabel&, const OdometerLabel&) = default;
  /// `e<index>`
  std::string to_string() const;
};

using OdometerKet = BasicKet<OdometerLabel>;

/// s_n e_m = e_{2^{n-1}(2m-1)}; s_n^* e_p = e_m when p = 2^{n-1}(2m-1), zero otherwise.
std::optional<OdometerLabel> odometer_action(Letter n, bool star, const OdometerLabel& label);
OdometerKet apply_odometer(Letter n, bool star, const OdometerKet& v);
/// The word J 1^inf with e_index = s_J e_1.
EPWord odometer_isomorphism(const OdometerLabel& label);
/// Inverse of odometer_isomorphism; DomainError unless the label's tail is 1^inf.
OdometerLabel odometer_from_word(const EPWord& label);
std::string to_string(const OdometerKet& v);

class OdometerAction {
 public:
  using ket_type = OdometerKet;

  OdometerKet apply_s(Letter m, bool star, const OdometerKet& v) const { return apply_odometer(m, star, v); }
  /// 2-adic valuation + 1: the only n with s_n^* e_p nonzero.
  Letter leading_index_bound(const OdometerLabel& label) const;
};

/// fock_word_in_ON = translate_word(fock_word), and the embedded creators
/// evaluated literally on the GP vector of P_N(1) give prod sqrt(k!) times the t-word ket.
Report check_embedding(const EmbeddingSpec& spec, std::span<const Occupations> samples);
/// Translated words of s_1..s_K are pairwise prefix-incomparable and satisfy
/// s_i^* s_j v = delta_ij v on the sample kets of P_N(1).
Report check_embedding_relations(const EmbeddingSpec& spec, Letter max_generator, std::span<const Ket> samples);
/// Intertwining of odometer_isomorphism for s_n, s_n^* (n <= max_generator,
/// indices <= max_index), round trip, and a_n^* e_1 = e_{2^{n-1}+1} for n <= max_mode.
Report check_odometer(Letter max_generator, std::uint64_t max_index, Mode max_mode);

}  // namespace rbs
