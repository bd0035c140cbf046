#pragma once

#include <algorithm>
#include <concepts>
#include <span>

#include "rbs/boson.h"
#include "rbs/cuntz.h"
#include "rbs/errors.h"
#include "rbs/ket.h"
#include "rbs/report.h"

namespace rbs {

/// A representation of O_inf acting on kets over some label type, together
/// with an upper bound on the index m for which s_m^* can be nonzero on a
/// given basis label.
template <class Rep>
concept InfiniteCuntzAction = requires(const Rep& rep, Letter m, bool star, const typename Rep::ket_type& v,
                                       const typename Rep::ket_type::label_type& label) {
  { rep.apply_s(m, star, v) } -> std::same_as<typename Rep::ket_type>;
  { rep.leading_index_bound(label) } -> std::convertible_to<Letter>;
};

/// Truncated evaluation of the defining sums
///   a_1 = sum_m sqrt(m) s_m s_{m+1}^*,  a_n = rho(a_{n-1}) = sum_k s_k a_{n-1} s_k^*
/// (and their adjoints), term by term through the generator action. Used to
/// cross-check the closed-form label rule and to drive the boson action in
/// representations that are not word models.
template <InfiniteCuntzAction Rep>
typename Rep::ket_type literal_boson(const Rep& rep, Mode n, bool create, const typename Rep::ket_type& v) {
  using KetT = typename Rep::ket_type;
  if (v.is_zero()) return {};
  Letter bound = 0;
  for (const auto& [label, c] : v) bound = std::max<Letter>(bound, rep.leading_index_bound(label));
  // Every nonzero term has its stripped index <= bound, so M = bound + 1 suffices.
  const Letter cutoff = bound + 1;
  KetT out;
  if (n == 1) {
    for (Letter m = 1; m <= cutoff; ++m) {
      const Letter stripped = create ? m : m + 1;
      const Letter pushed = create ? m + 1 : m;
      KetT w = rep.apply_s(stripped, true, v);
      if (w.is_zero()) continue;
      out += sqrt_nat(m) * rep.apply_s(pushed, false, w);
    }
    return out;
  }
  for (Letter k = 1; k <= cutoff; ++k) {
    KetT w = rep.apply_s(k, true, v);
    if (w.is_zero()) continue;
    out += rep.apply_s(k, false, literal_boson(rep, n - 1, create, w));
  }
  return out;
}

/// The word model P_inf(cycle) as an O_inf action.
class WordAction {
 public:
  using ket_type = Ket;

  explicit WordAction(RepSpec spec) : spec_(std::move(spec)) {
    if (spec_.alphabet().is_finite()) throw DomainError("the word model of O_inf needs the infinite alphabet");
  }

  Ket apply_s(Letter m, bool star, const Ket& v) const { return apply_generator(spec_, m, star, v); }
  Letter leading_index_bound(const EPWord& label) const { return label.max_letter(); }
  const RepSpec& spec() const noexcept { return spec_; }

 private:
  RepSpec spec_;
};

/// Closed-form a_n, a_n^* against literal_boson on every sample, n <= max_mode.
Report check_literal_agreement(const RepSpec& spec, std::span<const Ket> samples, Mode max_mode);

}  // namespace rbs
