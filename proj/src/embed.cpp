#include "rbs/embed.h"

#include <bit>
#include <limits>
#include <stdexcept>

#include "rbs/errors.h"
#include "rbs/literal.h"

namespace rbs {

EmbeddingSpec::EmbeddingSpec(Letter n) : N(n) {
  if (n < 2) throw DomainError("embedding target O_N needs N >= 2, got " + std::to_string(n));
}

RepSpec EmbeddingSpec::ambient() const { return RepSpec(Alphabet::finite(N), {1}); }

Word embed_generator(const EmbeddingSpec& spec, Letter m) {
  if (m == 0) throw DomainError("generator index must be >= 1");
  const Letter k = (m - 1) / (spec.N - 1) + 1;
  const Letter i = (m - 1) % (spec.N - 1) + 1;
  Word out(k - 1, spec.N);
  out.push_back(i);
  return out;
}

Word translate_word(const EmbeddingSpec& spec, const Word& word) {
  Word out;
  for (Letter m : word) {
    const Word w = embed_generator(spec, m);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

Word fock_word_in_ON(const EmbeddingSpec& spec, const Occupations& occupations) {
  Word out;
  Mode previous = 0;
  for (const auto& [mode, k] : occupations) {
    if (k == 0) continue;
    out.insert(out.end(), mode - previous - 1, 1);
    const Letter c = k / (spec.N - 1) + 1;
    const Letter b = k % (spec.N - 1) + 1;
    out.insert(out.end(), c - 1, spec.N);
    out.push_back(b);
    previous = mode;
  }
  return out;
}

EmbeddedAction::EmbeddedAction(EmbeddingSpec spec, RepSpec ambient) : spec_(spec), ambient_(std::move(ambient)) {
  if (ambient_.alphabet().bound != spec.N) {
    throw DomainError("representation " + ambient_.to_string() + " is not one of O_" + std::to_string(spec.N));
  }
}

Ket EmbeddedAction::apply_s(Letter m, bool star, const Ket& v) const {
  const Word w = embed_generator(spec_, m);
  const CuntzMonomial mono = star ? CuntzMonomial{RadicalScalar(1L), {}, w} : CuntzMonomial{RadicalScalar(1L), w, {}};
  return apply_polynomial(ambient_, CuntzPolynomial(mono), v);
}

Letter EmbeddedAction::leading_index_bound(const EPWord& label) const {
  const std::size_t horizon = label.prefix().size() + label.cycle().size();
  Letter run = 0;
  while (run < horizon && label.letter_at(run + 1) == spec_.N) ++run;
  // Only N^inf has a run covering a whole period; no s_m^* survives on it.
  if (run == horizon) return 0;
  return (spec_.N - 1) * (run + 1);
}

std::string OdometerLabel::to_string() const { return "e" + std::to_string(index); }

std::optional<OdometerLabel> odometer_action(Letter n, bool star, const OdometerLabel& label) {
  if (n == 0 || label.index == 0) throw DomainError("odometer indices start at 1");
  if (star) {
    const auto v = static_cast<Letter>(std::countr_zero(label.index));
    if (v != n - 1) return std::nullopt;
    return OdometerLabel{((label.index >> v) + 1) / 2};
  }
  constexpr auto max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t odd = 2 * label.index - 1;
  if (label.index > max / 2 || n > 64 || (odd > (max >> (n - 1)))) {
    throw std::overflow_error("odometer index overflows 64 bits");
  }
  return OdometerLabel{odd << (n - 1)};
}

OdometerKet apply_odometer(Letter n, bool star, const OdometerKet& v) {
  OdometerKet out;
  for (const auto& [label, c] : v) {
    if (auto image = odometer_action(n, star, label)) out.add(*image, c);
  }
  return out;
}

EPWord odometer_isomorphism(const OdometerLabel& label) {
  if (label.index == 0) throw DomainError("odometer indices start at 1");
  Word prefix;
  std::uint64_t p = label.index;
  while (p != 1) {
    const auto v = static_cast<Letter>(std::countr_zero(p));
    prefix.push_back(v + 1);
    p = ((p >> v) + 1) / 2;
  }
  return canonicalize(std::move(prefix), {1});
}

OdometerLabel odometer_from_word(const EPWord& label) {
  if (label.cycle() != Word{1}) throw DomainError("only labels ending in 1^inf live in the odometer model");
  OdometerLabel out{1};
  for (auto it = label.prefix().rbegin(); it != label.prefix().rend(); ++it) out = *odometer_action(*it, false, out);
  return out;
}

std::string to_string(const OdometerKet& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [label, c] : v) {
    if (!out.empty()) out += '\n';
    out += scalar_factor_string(c) + " * |" + label.to_string() + ">";
  }
  return out;
}

Letter OdometerAction::leading_index_bound(const OdometerLabel& label) const {
  return static_cast<Letter>(std::countr_zero(label.index)) + 1;
}

Report check_embedding(const EmbeddingSpec& spec, std::span<const Occupations> samples) {
  Report report("Fock states through O_inf -> O_" + std::to_string(spec.N));
  const EmbeddedAction action(spec);
  const Ket omega = gp_vector(action.ambient());
  Tally words("fock_word_in_ON = translate_word(fock_word)");
  Tally states("embedded creators on Omega = prod sqrt(k!) t_word Omega");
  for (const auto& occ : samples) {
    const std::string where = "[" + occupations_to_string(occ) + "]";
    const FockWord fw = fock_word(occ);
    const Word t_word = fock_word_in_ON(spec, occ);
    words.record(t_word == translate_word(spec, fw.word), where);
    Ket lhs = omega;
    const BosonMonomial creators = creator_monomial(occ);
    for (auto it = creators.creators.rbegin(); it != creators.creators.rend(); ++it) {
      for (std::uint32_t i = 0; i < it->second; ++i) lhs = literal_boson(action, it->first, true, lhs);
    }
    const Ket rhs = fw.coefficient * Ket(canonicalize(t_word, {1}));
    states.record(lhs == rhs, where + " coefficient " + fw.coefficient.to_string());
  }
  words.commit(report);
  states.commit(report);
  return report;
}

Report check_embedding_relations(const EmbeddingSpec& spec, Letter max_generator, std::span<const Ket> samples) {
  Report report("embedded Cuntz relations in O_" + std::to_string(spec.N));
  Tally incomparable("translated generator words are prefix-incomparable");
  for (Letter i = 1; i <= max_generator; ++i) {
    for (Letter j = i + 1; j <= max_generator; ++j) {
      const Word a = embed_generator(spec, i);
      const Word b = embed_generator(spec, j);
      const std::size_t n = std::min(a.size(), b.size());
      incomparable.record(!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin()),
                          "s" + std::to_string(i) + " vs s" + std::to_string(j));
    }
  }
  incomparable.commit(report);
  const EmbeddedAction action(spec);
  Tally relations("s_i* s_j v = delta_ij v, i, j <= " + std::to_string(max_generator));
  for (std::size_t k = 0; k < samples.size(); ++k) {
    for (Letter i = 1; i <= max_generator; ++i) {
      for (Letter j = 1; j <= max_generator; ++j) {
        const Ket lhs = action.apply_s(i, true, action.apply_s(j, false, samples[k]));
        relations.record(lhs == (i == j ? samples[k] : Ket()),
                         "sample " + std::to_string(k) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
  }
  relations.commit(report);
  return report;
}

Report check_odometer(Letter max_generator, std::uint64_t max_index, Mode max_mode) {
  Report report("odometer model of P_inf(1)");
  const RepSpec word_model = RepSpec::infinite({1});
  Tally round_trip("odometer_from_word(odometer_isomorphism(e_p)) = e_p, p <= " + std::to_string(max_index));
  Tally forward("iso(s_n e_p) = s_n iso(e_p)");
  Tally backward("iso(s_n* e_p) = s_n* iso(e_p)");
  for (std::uint64_t p = 1; p <= max_index; ++p) {
    const OdometerLabel e{p};
    const EPWord w = odometer_isomorphism(e);
    round_trip.record(odometer_from_word(w) == e, e.to_string());
    for (Letter n = 1; n <= max_generator; ++n) {
      for (bool star : {false, true}) {
        const auto image = odometer_action(n, star, e);
        const Ket mapped = image ? Ket(odometer_isomorphism(*image)) : Ket();
        (star ? backward : forward)
            .record(mapped == apply_generator(word_model, n, star, Ket(w)), "n=" + std::to_string(n) + ", " + e.to_string());
      }
    }
  }
  round_trip.commit(report);
  forward.commit(report);
  backward.commit(report);
  Tally one_particle("a_n* e_1 = e_{2^{n-1}+1}, n <= " + std::to_string(max_mode));
  const OdometerAction action;
  for (Mode n = 1; n <= max_mode; ++n) {
    const OdometerKet lhs = literal_boson(action, n, true, OdometerKet(OdometerLabel{1}));
    const OdometerKet rhs(OdometerLabel{(std::uint64_t{1} << (n - 1)) + 1});
    one_particle.record(lhs == rhs, "n=" + std::to_string(n) + ": " + to_string(lhs));
  }
  one_particle.commit(report);
  return report;
}

}  // namespace rbs
