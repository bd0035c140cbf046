#include "rbs/branching.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rbs/errors.h"
#include "rbs/random.h"

namespace rbs {

std::string Classification::to_string() const {
  switch (kind) {
    case BosonClass::Fock:
      return "Fock";
    case BosonClass::Fj:
      return "F_" + std::to_string(j);
    case BosonClass::F12:
      return "F_12";
    case BosonClass::F21:
      return "F_21";
    case BosonClass::GeneralPeriodic:
      break;
  }
  return "GeneralPeriodic(" + word_to_string(pattern) + ")";
}

std::vector<ComponentReport> enumerate_components(const RepSpec& spec) {
  if (spec.alphabet().is_finite()) {
    throw DomainError("branching to the boson algebra needs a representation of O_inf");
  }
  std::vector<ComponentReport> out;
  for (Word& rotation : rotations(spec.cycle())) {
    ComponentReport c{spec, EPWord(rotation), rotation, {}, {}};
    c.classification.pattern = rotation;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

std::string mode_name(const char* op, Mode n) { return std::string(op) + std::to_string(n); }

VerifiedIdentity eigen_identity(std::string name, const Ket& lhs, const Ket& vacuum, const RadicalScalar& expected) {
  return {std::move(name), inner(vacuum, lhs), lhs == expected * vacuum};
}

VerifiedIdentity zero_identity(std::string name, const Ket& lhs) {
  return {std::move(name), norm_squared(lhs), lhs.is_zero()};
}

Ket power(const BosonFactor& f, std::uint32_t k, Ket v) {
  for (std::uint32_t i = 0; i < k && !v.is_zero(); ++i) v = apply_boson_factor(f, v);
  return v;
}

Ket number_ladder(Mode n, const Ket& v) { return apply_annihilate(n, apply_create(n, v)); }

}  // namespace

std::vector<RadicalScalar> number_eigenvalues(const EPWord& vacuum, Mode count) {
  const Ket omega(vacuum);
  std::vector<RadicalScalar> out;
  for (Mode n = 1; n <= count; ++n) out.push_back(inner(omega, number_ladder(n, omega)));
  return out;
}

Classification classify_component(ComponentReport& component, Mode max_mode) {
  const Word& pattern = component.pattern;
  const Ket omega(component.vacuum);
  const Mode top = std::max<Mode>(max_mode, static_cast<Mode>(2 * pattern.size()));
  auto& verified = component.verified;

  Classification cls;
  cls.pattern = pattern;
  if (pattern.size() == 1) {
    cls.j = pattern.front();
    cls.kind = cls.j == 1 ? BosonClass::Fock : BosonClass::Fj;
  } else if (pattern == Word{1, 2}) {
    cls.kind = BosonClass::F12;
  } else if (pattern == Word{2, 1}) {
    cls.kind = BosonClass::F21;
  }

  // a_n a_n^* Omega = c_n Omega holds for every class; it is the eigenvalue list.
  for (Mode n = 1; n <= top; ++n) {
    const Letter c = pattern[(n - 1) % pattern.size()];
    verified.push_back(eigen_identity(mode_name("a", n) + " " + mode_name("a", n) + "* Omega = " +
                                          std::to_string(c) + " Omega",
                                      number_ladder(n, omega), omega, RadicalScalar(static_cast<long>(c))));
  }

  switch (cls.kind) {
    case BosonClass::Fock:
      for (Mode n = 1; n <= top; ++n) {
        verified.push_back(zero_identity(mode_name("a", n) + " Omega = 0", apply_annihilate(n, omega)));
      }
      break;
    case BosonClass::Fj:
      for (Mode n = 1; n <= top; ++n) {
        verified.push_back(zero_identity(mode_name("a", n) + "^" + std::to_string(cls.j) + " Omega = 0",
                                         power({n, false}, cls.j, omega)));
        std::int64_t falling = 1;
        for (Letter l = 1; l + 1 <= cls.j; ++l) {
          falling *= static_cast<std::int64_t>(cls.j - l);
          const Ket lhs = power({n, true}, l, power({n, false}, l, omega));
          verified.push_back(eigen_identity("(" + mode_name("a", n) + "*)^" + std::to_string(l) + " " +
                                                mode_name("a", n) + "^" + std::to_string(l) + " Omega = " +
                                                std::to_string(falling) + " Omega",
                                            lhs, omega, RadicalScalar(static_cast<long>(falling))));
        }
      }
      break;
    case BosonClass::F12:
    case BosonClass::F21: {
      // F_12: a_{2n-1} Omega = 0, a_{2n}^* a_{2n} Omega = Omega; F_21 swaps parities.
      const bool odd_vacant = cls.kind == BosonClass::F12;
      for (Mode n = 1; n <= top; ++n) {
        const Mode vacant = odd_vacant ? 2 * n - 1 : 2 * n;
        const Mode filled = odd_vacant ? 2 * n : 2 * n - 1;
        verified.push_back(zero_identity(mode_name("a", vacant) + " Omega = 0", apply_annihilate(vacant, omega)));
        verified.push_back(eigen_identity(mode_name("a", filled) + "* " + mode_name("a", filled) + " Omega = Omega",
                                          apply_create(filled, apply_annihilate(filled, omega)), omega,
                                          RadicalScalar(1L)));
      }
      break;
    }
    case BosonClass::GeneralPeriodic:
      for (Mode n = 1; n <= top; ++n) {
        const Letter c = pattern[(n - 1) % pattern.size()];
        if (c == 1) {
          verified.push_back(zero_identity(mode_name("a", n) + " Omega = 0", apply_annihilate(n, omega)));
        } else {
          verified.push_back(eigen_identity(mode_name("a", n) + "* " + mode_name("a", n) + " Omega = " +
                                                std::to_string(c - 1) + " Omega",
                                            apply_create(n, apply_annihilate(n, omega)), omega,
                                            RadicalScalar(static_cast<long>(c - 1))));
        }
      }
      break;
  }

  for (const auto& id : verified) {
    if (!id.passed) {
      throw std::logic_error("defining identity failed on " + component.vacuum.to_string() + ": " + id.identity +
                             " (scalar " + id.scalar.to_string() + ")");
    }
  }
  component.classification = cls;
  return cls;
}

std::vector<ComponentReport> branch(const RepSpec& spec, Mode max_mode) {
  auto components = enumerate_components(spec);
  for (auto& c : components) classify_component(c, max_mode);
  return components;
}

CyclicityWitness cyclicity_witness(const ComponentReport& component, const EPWord& target) {
  if (!tail_equivalent(component.vacuum, target)) {
    throw DomainError("target " + target.to_string() + " is not in the component of " +
                      component.vacuum.to_string());
  }
  CyclicityWitness out;
  out.lambda = RadicalScalar(1L);
  // Past the target's prefix both words agree letter by letter.
  const std::size_t span = std::max(target.prefix().size(), component.vacuum.prefix().size());
  for (std::size_t n = 1; n <= span; ++n) {
    const Letter from = component.vacuum.letter_at(n);
    const Letter to = target.letter_at(n);
    const auto mode = static_cast<Mode>(n);
    if (to > from) {
      out.monomial.creators[mode] = to - from;
      out.lambda *= sqrt_product_range(from, to - 1);
    } else if (to < from) {
      out.monomial.annihilators[mode] = from - to;
      out.lambda *= sqrt_product_range(to, from - 1);
    }
  }
  return out;
}

namespace {

void for_each_word(std::size_t max_length, Letter max_letter, const std::function<void(const Word&)>& visit) {
  Word current;
  std::function<void()> rec = [&] {
    visit(current);
    if (current.size() == max_length) return;
    for (Letter l = 1; l <= max_letter; ++l) {
      current.push_back(l);
      rec();
      current.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<EPWord> enumerate_labels(const RepSpec& spec, std::size_t max_prefix, Letter max_letter) {
  if (spec.alphabet().bound) max_letter = std::min(max_letter, *spec.alphabet().bound);
  std::set<EPWord> labels;
  for_each_word(max_prefix, max_letter, [&](const Word& p) { labels.insert(canonicalize(p, spec.cycle())); });
  return {labels.begin(), labels.end()};
}

std::vector<EPWord> basis_lambda_j(Letter j, std::size_t bound) {
  if (j == 0) throw DomainError("j must be >= 1");
  std::set<EPWord> labels;
  for_each_word(bound, static_cast<Letter>(bound), [&](const Word& p) {
    if (p.empty() || p.back() != j) labels.insert(canonicalize(p, {j}));
  });
  return {labels.begin(), labels.end()};
}

std::vector<Word> lambda_j_indices(Letter j, std::size_t bound) {
  if (j == 0) throw DomainError("j must be >= 1");
  std::vector<Word> out;
  // (m): includes (j), which is Omega itself.
  for (Letter m = 1; m <= bound; ++m) out.push_back({m});
  if (j > bound) out.push_back({j});
  // J.(n), |J| >= 1, n != j
  for_each_word(bound, static_cast<Letter>(bound), [&](const Word& w) {
    if (w.size() >= 2 && w.back() != j) out.push_back(w);
  });
  return out;
}

namespace {

struct ModeOption {
  Mode mode;
  std::int32_t signed_exponent;  // >0 creator power, <0 annihilator power
};

std::vector<NormalizedMonomial> enumerate_family(
    Mode max_mode, const std::function<std::vector<std::int32_t>(Mode)>& options,
    const std::function<RadicalScalar(Mode, std::int32_t)>& norm_factor) {
  struct Entry {
    std::uint32_t displacement;
    std::vector<std::pair<Mode, std::int32_t>> key;
    NormalizedMonomial value;
  };
  std::vector<Entry> entries;
  std::vector<ModeOption> chosen;
  std::function<void(Mode)> rec = [&](Mode mode) {
    if (mode > max_mode) {
      Entry e{0, {}, {}};
      RadicalScalar squared_norm(1L);
      for (const auto& opt : chosen) {
        if (opt.signed_exponent == 0) continue;
        const auto magnitude = static_cast<std::uint32_t>(std::abs(opt.signed_exponent));
        e.displacement += magnitude;
        e.key.emplace_back(opt.mode, opt.signed_exponent);
        (opt.signed_exponent > 0 ? e.value.monomial.creators : e.value.monomial.annihilators)[opt.mode] = magnitude;
        squared_norm *= norm_factor(opt.mode, opt.signed_exponent);
      }
      e.value.normalizer = squared_norm.inverse();
      entries.push_back(std::move(e));
      return;
    }
    for (std::int32_t d : options(mode)) {
      chosen.push_back({mode, d});
      rec(mode + 1);
      chosen.pop_back();
    }
  };
  rec(1);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.displacement, a.key) < std::tie(b.displacement, b.key);
  });
  std::vector<NormalizedMonomial> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.value));
  return out;
}

}  // namespace

std::vector<NormalizedMonomial> basis_typej(Letter j, Mode max_mode, std::uint32_t max_exponent) {
  if (j == 0) throw DomainError("j must be >= 1");
  const auto max_lower = static_cast<std::int32_t>(std::min<std::uint32_t>(j - 1, max_exponent));
  auto options = [&](Mode) {
    std::vector<std::int32_t> out{0};
    for (std::int32_t k = 1; k <= static_cast<std::int32_t>(max_exponent); ++k) out.push_back(k);
    for (std::int32_t l = 1; l <= max_lower; ++l) out.push_back(-l);
    return out;
  };
  // sqrt of (j+k-1)...j for creators, (j-1)...(j-l) for annihilators
  auto norm = [&](Mode, std::int32_t d) {
    return d > 0 ? sqrt_product_range(j, j + static_cast<Letter>(d) - 1)
                 : sqrt_product_range(j - static_cast<Letter>(-d), j - 1);
  };
  return enumerate_family(max_mode, options, norm);
}

std::vector<NormalizedMonomial> basis_onetwov(Mode max_mode, std::uint32_t max_exponent, bool swapped) {
  auto lowerable = [&](Mode mode) { return (mode % 2 == 0) != swapped; };
  auto options = [&](Mode mode) {
    std::vector<std::int32_t> out{0};
    for (std::int32_t k = 1; k <= static_cast<std::int32_t>(max_exponent); ++k) out.push_back(k);
    if (lowerable(mode)) out.push_back(-1);
    return out;
  };
  // k! on the empty modes, (l+1)! on the occupied ones, 1 for a single lowering
  auto norm = [&](Mode mode, std::int32_t d) {
    if (d < 0) return RadicalScalar(1L);
    const auto k = static_cast<std::uint64_t>(d);
    return lowerable(mode) ? sqrt_factorial(k + 1) : sqrt_factorial(k);
  };
  return enumerate_family(max_mode, options, norm);
}

std::vector<EPWord> component_labels_at_cutoff(const EPWord& vacuum, Mode max_mode, std::uint32_t max_exponent) {
  std::set<EPWord> labels;
  Word prefix(max_mode);
  const Word tail = rotate_left(vacuum.cycle(), max_mode >= vacuum.prefix().size() ? max_mode - vacuum.prefix().size() : 0);
  if (vacuum.prefix().size() > max_mode) throw DomainError("vacuum prefix longer than the mode cutoff");
  std::function<void(Mode)> rec = [&](Mode n) {
    if (n > max_mode) {
      labels.insert(canonicalize(prefix, tail));
      return;
    }
    const Letter v = vacuum.letter_at(n);
    const Letter lo = v > max_exponent ? v - max_exponent : 1;
    for (Letter l = lo; l <= v + max_exponent; ++l) {
      prefix[n - 1] = l;
      rec(n + 1);
    }
  };
  rec(1);
  return {labels.begin(), labels.end()};
}

Report check_basis_family(const std::string& name, std::span<const NormalizedMonomial> family, const EPWord& vacuum,
                          Mode max_mode, std::uint32_t max_exponent) {
  Report report(name + " on " + vacuum.to_string());
  const Ket omega(vacuum);
  std::vector<Ket> vectors;
  vectors.reserve(family.size());
  std::set<EPWord> reached;
  for (const auto& f : family) {
    vectors.push_back(f.normalizer * apply_boson(f.monomial, omega));
    for (const auto& [label, c] : vectors.back()) reached.insert(label);
  }
  Tally ortho("<v_a, v_b> = delta_ab over " + std::to_string(family.size()) + " vectors");
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a; b < vectors.size(); ++b) {
      const RadicalScalar ip = inner(vectors[a], vectors[b]);
      ortho.record(ip == RadicalScalar(a == b ? 1L : 0L),
                   BosonPolynomial(family[a].monomial).to_string() + " vs " +
                       BosonPolynomial(family[b].monomial).to_string() + ": " + ip.to_string());
    }
  }
  ortho.commit(report);
  const auto expected = component_labels_at_cutoff(vacuum, max_mode, max_exponent);
  const bool same = std::equal(reached.begin(), reached.end(), expected.begin(), expected.end());
  report.add("span equals component labels at cutoff", same,
             std::to_string(reached.size()) + " reached, " + std::to_string(expected.size()) + " expected");
  return report;
}

Report check_lambda_basis(Letter j, std::size_t bound) {
  Report report("Lambda_" + std::to_string(j) + " basis, bound " + std::to_string(bound));
  const RepSpec spec = RepSpec::infinite({j});
  const Ket omega = gp_vector(spec);
  std::vector<Ket> vectors;
  std::set<EPWord> reached;
  for (const Word& index : lambda_j_indices(j, bound)) {
    Ket v = apply_polynomial(spec, CuntzPolynomial(CuntzMonomial{RadicalScalar(1L), index, {}}), omega);
    for (const auto& [label, c] : v) reached.insert(label);
    vectors.push_back(std::move(v));
  }
  Tally ortho("<v_J, v_K> = delta_JK over " + std::to_string(vectors.size()) + " multi-indices");
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a; b < vectors.size(); ++b) {
      const RadicalScalar ip = inner(vectors[a], vectors[b]);
      ortho.record(ip == RadicalScalar(a == b ? 1L : 0L), std::to_string(a) + " vs " + std::to_string(b));
    }
  }
  ortho.commit(report);
  const auto expected = basis_lambda_j(j, bound);
  const bool same = std::equal(reached.begin(), reached.end(), expected.begin(), expected.end());
  report.add("labels equal basis_lambda_j", same,
             std::to_string(reached.size()) + " reached, " + std::to_string(expected.size()) + " expected");
  return report;
}

Report check_vacuum_orthogonality(Letter j, Mode max_mode, std::uint32_t max_power) {
  Report report("vacuum orthogonality in F_" + std::to_string(j));
  const Ket omega(EPWord(Word{j}));
  Tally lower("<Omega | a_n^k Omega> = 0");
  Tally raise("<Omega | (a_n*)^k Omega> = 0");
  for (Mode n = 1; n <= max_mode; ++n) {
    for (std::uint32_t k = 1; k <= max_power; ++k) {
      const std::string where = "n=" + std::to_string(n) + ", k=" + std::to_string(k);
      lower.record(inner(omega, power({n, false}, k, omega)).is_zero(), where);
      raise.record(inner(omega, power({n, true}, k, omega)).is_zero(), where);
    }
  }
  lower.commit(report);
  raise.commit(report);
  return report;
}

Report check_partition(const RepSpec& spec, std::size_t max_prefix, Letter max_letter) {
  const auto components = enumerate_components(spec);
  const auto labels = enumerate_labels(spec, max_prefix, max_letter);
  Report report("component partition of " + spec.to_string());
  Tally tally("each label lies in exactly one component (" + std::to_string(labels.size()) + " labels)");
  for (const auto& label : labels) {
    const auto hits = std::count_if(components.begin(), components.end(),
                                    [&](const ComponentReport& c) { return tail_equivalent(c.vacuum, label); });
    tally.record(hits == 1, label.to_string() + " in " + std::to_string(hits) + " components");
  }
  tally.commit(report);
  return report;
}

Report check_cyclicity(const RepSpec& spec, std::size_t max_prefix, Letter max_letter) {
  const auto components = enumerate_components(spec);
  const auto labels = enumerate_labels(spec, max_prefix, max_letter);
  Report report("cyclicity of the vacua of " + spec.to_string());
  Tally tally("x Omega = lambda |w>, lambda != 0 (" + std::to_string(labels.size()) + " labels)");
  for (const auto& label : labels) {
    auto it = std::find_if(components.begin(), components.end(),
                           [&](const ComponentReport& c) { return tail_equivalent(c.vacuum, label); });
    if (it == components.end()) {
      tally.record(false, label.to_string() + " has no component");
      continue;
    }
    const auto witness = cyclicity_witness(*it, label);
    const Ket reached = apply_boson(witness.monomial, Ket(it->vacuum));
    tally.record(!witness.lambda.is_zero() && reached == witness.lambda * Ket(label), label.to_string());
  }
  tally.commit(report);
  return report;
}

Report check_two_cycle_density(std::size_t max_length, Letter max_letter) {
  const RepSpec spec = RepSpec::infinite({1, 2});
  const Ket omega = gp_vector(spec);
  const Ket omega_prime = apply_generator(spec, 2, false, omega);
  Report report("s_J Omega inside V_1 + V_2 for P_inf(12)");
  Tally even("|J| even: s_J Omega = C a^{*(J-1)} a_2 a_4 ... Omega");
  Tally odd("|J| odd: s_J Omega = C a^{*(J-1)} a_1 a_3 ... Omega'");
  for_each_word(max_length, max_letter, [&](const Word& j) {
    if (j.empty()) return;
    const Ket lhs = apply_polynomial(spec, CuntzPolynomial(CuntzMonomial{RadicalScalar(1L), j, {}}), omega);
    BosonMonomial x;
    RadicalScalar norm(1L);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i] > 1) x.creators[static_cast<Mode>(i + 1)] = j[i] - 1;
      norm *= sqrt_factorial(j[i] - 1);
    }
    const bool is_even = j.size() % 2 == 0;
    for (std::size_t i = is_even ? 2 : 1; i <= j.size(); i += 2) x.annihilators[static_cast<Mode>(i)] = 1;
    x.coeff = norm.inverse();
    const Ket rhs = apply_boson(x, is_even ? omega : omega_prime);
    (is_even ? even : odd).record(lhs == rhs, word_to_string(j));
  });
  even.commit(report);
  odd.commit(report);
  return report;
}

Report inequivalence_witness(const ComponentReport& first, const ComponentReport& second, std::size_t samples,
                             std::uint64_t seed, Mode max_mode, std::uint32_t max_exponent) {
  if (first.pattern == second.pattern) throw DomainError("inequivalence needs components with distinct patterns");
  const std::string a = first.classification.to_string();
  const std::string b = second.classification.to_string();
  Report report("inequivalence " + a + " vs " + b);
  const bool shared = first.ambient == second.ambient;
  if (shared) {
    report.add("vacua are not tail-equivalent", !tail_equivalent(first.vacuum, second.vacuum),
               first.vacuum.to_string() + " vs " + second.vacuum.to_string());
  }
  const auto period = std::lcm(first.pattern.size(), second.pattern.size());
  const Mode count = std::max<Mode>(max_mode, static_cast<Mode>(2 * period));
  const auto ev1 = number_eigenvalues(first.vacuum, count);
  const auto ev2 = number_eigenvalues(second.vacuum, count);
  auto diff = std::mismatch(ev1.begin(), ev1.end(), ev2.begin());
  if (diff.first == ev1.end()) {
    report.add("number-operator eigenvalue lists differ", false, "identical up to mode " + std::to_string(count));
  } else {
    const auto mode = static_cast<Mode>(diff.first - ev1.begin() + 1);
    report.add("number-operator eigenvalue lists differ", true,
               "a" + std::to_string(mode) + " a" + std::to_string(mode) + "*: " + diff.first->to_string() + " vs " +
                   diff.second->to_string());
  }
  if (shared && samples > 0) {
    Sampler sampler(seed);
    const Ket omega2(second.vacuum);
    Tally tally("<x Omega, Omega'> = 0 for " + std::to_string(samples) + " seeded monomials");
    for (std::size_t i = 0; i < samples; ++i) {
      const BosonMonomial x = sampler.monomial(max_mode, max_exponent);
      const RadicalScalar ip = inner(apply_boson(x, Ket(first.vacuum)), omega2);
      tally.record(ip.is_zero(), BosonPolynomial(x).to_string() + ": " + ip.to_string());
    }
    tally.commit(report);
  }
  return report;
}

}  // namespace rbs
