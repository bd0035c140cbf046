#include "suites.h"

#include <algorithm>
#include <stdexcept>

#include "rbs/branching.h"
#include "rbs/cuntz.h"
#include "rbs/embed.h"
#include "rbs/literal.h"
#include "rbs/random.h"

namespace rbs::cli {

namespace {

constexpr std::size_t kMaxLabels = 8;
constexpr std::size_t kMaxPrefix = 5;
constexpr Letter kMaxLetter = 6;

std::vector<Ket> sample_kets(Sampler& sampler, const RepSpec& spec, std::size_t count) {
  std::vector<Ket> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.ket(spec, kMaxLabels, kMaxPrefix, kMaxLetter));
  return out;
}

std::vector<RepSpec> standard_reps() {
  return {RepSpec::infinite({1}), RepSpec::infinite({2}), RepSpec::infinite({1, 2})};
}

std::vector<Report> ccr(const SuiteOptions& o) {
  const Mode modes = o.modes.value_or(6);
  std::vector<Report> out;
  Sampler sampler(o.seed);
  for (const auto& spec : standard_reps()) {
    const auto kets = sample_kets(sampler, spec, o.samples);
    Report r = check_ccr(kets, modes);
    r.merge(check_boson_adjointness(kets, modes));
    r.merge(check_literal_agreement(spec, kets, modes));
    out.emplace_back("CCR on " + spec.to_string()).merge(r);
  }
  return out;
}

std::vector<Report> relations(const SuiteOptions& o) {
  const Mode modes = o.modes.value_or(6);
  std::vector<Report> out;
  Sampler sampler(o.seed);
  for (const auto& spec : standard_reps()) {
    const auto kets = sample_kets(sampler, spec, o.samples);
    Report r = check_isometry_relations(spec, modes, kets);
    r.merge(check_intertwining(spec, kets, modes, modes));
    out.emplace_back("relations on " + spec.to_string()).merge(r);
  }
  const Letter n = o.N.value_or(3);
  for (const Word& cycle : {Word{1}, Word{1, 2}}) {
    const RepSpec spec(Alphabet::finite(n), cycle);
    const auto kets = sample_kets(sampler, spec, o.samples);
    out.push_back(check_isometry_relations(spec, n, kets));
  }
  return out;
}

std::vector<Report> bases(const SuiteOptions& o) {
  const Mode modes = o.modes.value_or(4);
  const std::uint32_t exponents = o.exponents.value_or(3);
  std::vector<Report> out;
  for (Letter j : {1u, 2u}) out.push_back(check_lambda_basis(j, modes));
  for (Letter j : {1u, 2u, 3u}) {
    const auto family = basis_typej(j, modes, exponents);
    out.push_back(check_basis_family("type-" + std::to_string(j) + " family", family, EPWord(Word{j}), modes, exponents));
  }
  const auto f12 = basis_onetwov(modes, exponents, false);
  out.push_back(check_basis_family("F_12 family", f12, EPWord(Word{1, 2}), modes, exponents));
  const auto f21 = basis_onetwov(modes, exponents, true);
  out.push_back(check_basis_family("F_21 family", f21, EPWord(Word{2, 1}), modes, exponents));
  for (Letter j : {2u, 3u}) out.push_back(check_vacuum_orthogonality(j, modes, std::max<std::uint32_t>(exponents, 4)));
  return out;
}

std::vector<Report> embedding(const SuiteOptions& o) {
  std::vector<Letter> targets = o.N ? std::vector<Letter>{*o.N} : std::vector<Letter>{2, 3};
  std::vector<Report> out;
  for (Letter n : targets) {
    const EmbeddingSpec spec(n);
    Sampler sampler(o.seed);
    std::vector<Occupations> occs;
    for (std::size_t i = 0; i < o.samples; ++i) occs.push_back(sampler.occupations(o.cutoff, o.cutoff));
    out.push_back(check_embedding(spec, occs));
    const auto kets = sample_kets(sampler, spec.ambient(), o.samples);
    out.push_back(check_embedding_relations(spec, 2 * o.cutoff, kets));
  }
  return out;
}

std::vector<Report> odometer(const SuiteOptions& o) {
  return {check_odometer(o.modes.value_or(6), 512, std::max<Mode>(9, o.modes.value_or(9)))};
}

std::vector<Report> fock_ext(const SuiteOptions& o) {
  return {check_fock_extension(o.cutoff + 1, 3, o.exponents.value_or(o.cutoff), o.modes.value_or(o.cutoff))};
}

std::vector<Report> dictionary(const SuiteOptions& o) {
  Sampler sampler(o.seed);
  std::vector<Occupations> occs;
  for (std::size_t i = 0; i < o.samples; ++i) occs.push_back(sampler.occupations(5, 5));
  return {check_fock_dictionary(occs)};
}

std::vector<Report> branching(const SuiteOptions& o) {
  const Mode modes = o.modes.value_or(6);
  std::vector<Report> out;
  std::vector<ComponentReport> classes;
  for (const Word& cycle : {Word{1}, Word{2}, Word{3}, Word{1, 2}, Word{1, 1, 2}}) {
    const RepSpec spec = RepSpec::infinite(cycle);
    Report r("branching of " + spec.to_string());
    try {
      auto components = branch(spec, modes);
      std::string names;
      std::size_t identities = 0;
      for (const auto& c : components) {
        names += (names.empty() ? "" : ", ") + c.classification.to_string();
        identities += c.verified.size();
      }
      r.add("components classified, defining identities hold", true,
            names + " (" + std::to_string(identities) + " identities)");
      if (cycle.size() == 1 || cycle == Word{1, 2}) {
        classes.insert(classes.end(), components.begin(), components.end());
      }
    } catch (const std::logic_error& e) {
      r.add("components classified, defining identities hold", false, e.what());
    }
    r.merge(check_partition(spec, 4, 5));
    r.merge(check_cyclicity(spec, 4, 5));
    out.push_back(std::move(r));
  }
  out.push_back(check_two_cycle_density(4, 4));
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      out.push_back(inequivalence_witness(classes[a], classes[b], o.samples, o.seed, modes, o.exponents.value_or(4)));
    }
  }
  return out;
}

Word expand(const Word& prefix, const Word& cycle, std::size_t length) {
  Word out = prefix;
  while (out.size() < length) out.push_back(cycle[(out.size() - prefix.size()) % cycle.size()]);
  out.resize(length);
  return out;
}

std::vector<Report> canonical(const SuiteOptions& o) {
  Sampler sampler(o.seed);
  Report report("canonical labels");
  Tally tally("canonical equality iff 40-letter expansions agree");
  std::size_t equal_pairs = 0;
  const std::size_t count = std::max<std::size_t>(o.samples, 1) * 20;
  for (std::size_t i = 0; i < count; ++i) {
    Word p1 = sampler.word(4, 3);
    Word c1 = sampler.word(4, 3, 1);
    Word p2 = p1;
    Word c2 = c1;
    if (sampler.coin()) {
      // an equal label written differently
      for (auto steps = sampler.uniform(1, 3); steps > 0; --steps) {
        const auto r = sampler.uniform(0, c2.size() - 1);
        p2.insert(p2.end(), c2.begin(), c2.begin() + static_cast<std::ptrdiff_t>(r));
        c2 = rotate_left(c2, r);
        if (sampler.coin() && c2.size() <= 6) c2.insert(c2.end(), c2.begin(), c2.end());
      }
    } else {
      p2 = sampler.word(4, 3);
      c2 = sampler.word(4, 3, 1);
    }
    const bool same_label = canonicalize(p1, c1) == canonicalize(p2, c2);
    const bool same_expansion = expand(p1, c1, 40) == expand(p2, c2, 40);
    equal_pairs += same_expansion ? 1 : 0;
    tally.record(same_label == same_expansion, word_to_string(p1) + "|" + word_to_string(c1) + " vs " +
                                                   word_to_string(p2) + "|" + word_to_string(c2));
  }
  tally.commit(report);
  report.add("equal pairs exercised", equal_pairs > 0, std::to_string(equal_pairs) + " of " + std::to_string(count));
  return {report};
}

using SuiteFn = std::vector<Report> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& table() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"ccr", ccr},           {"relations", relations}, {"bases", bases},           {"embedding", embedding},
      {"odometer", odometer}, {"fock-ext", fock_ext},   {"dictionary", dictionary}, {"branching", branching},
      {"canonical", canonical}};
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::ranges::find(suite_names(), name) != suite_names().end();
}

std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : table()) {
    if (n == name) return fn(options);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace rbs::cli
