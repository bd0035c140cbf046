// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria (0 when all pass).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.h"
#include "oracles.h"
#include "rbs/branching.h"
#include "rbs/embed.h"
#include "rbs/literal.h"
#include "rbs/random.h"

using namespace rbs;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t checks = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      first_failure = what;
    }
  }
  void absorb(const Report& r) {
    for (const auto& c : r.checks()) record(c.passed, r.title() + ": " + c.name + " (" + c.detail + ")");
  }
};

std::vector<Ket> sample_kets(Sampler& s, const RepSpec& spec, std::size_t count) {
  std::vector<Ket> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s.ket(spec, 8, 5, 6));
  return out;
}

Ket power(Mode n, bool create, std::uint32_t k, Ket v) {
  for (std::uint32_t i = 0; i < k; ++i) v = create ? apply_create(n, v) : apply_annihilate(n, v);
  return v;
}

// Tail class by raw expansion: positions 21..40 determine a label whose
// prefix is at most 5 letters and whose period divides 4.
Word tail_of(const EPWord& w) {
  const Word e = oracle::expand(w, 44);
  return Word(e.begin() + 20, e.end());
}

Outcome ccr() {
  Outcome o;
  Sampler s(1001);
  for (const auto& spec : {RepSpec::infinite({1}), RepSpec::infinite({2}), RepSpec::infinite({1, 2})}) {
    for (const Ket& v : sample_kets(s, spec, 50)) {
      for (Mode n = 1; n <= 6; ++n) {
        for (Mode m = 1; m <= 6; ++m) {
          const std::string where = spec.to_string() + " n=" + std::to_string(n) + " m=" + std::to_string(m);
          const Ket mixed = apply_annihilate(n, apply_create(m, v)) - apply_create(m, apply_annihilate(n, v));
          o.record(mixed == (n == m ? v : Ket()), "[a_n, a_m*] " + where);
          o.record((apply_annihilate(n, apply_annihilate(m, v)) - apply_annihilate(m, apply_annihilate(n, v))).is_zero(),
                   "[a_n, a_m] " + where);
          o.record((apply_create(n, apply_create(m, v)) - apply_create(m, apply_create(n, v))).is_zero(),
                   "[a_n*, a_m*] " + where);
        }
      }
    }
  }
  return o;
}

Outcome restriction_type_j() {
  Outcome o;
  for (Letter j : {1u, 2u, 3u}) {
    const RepSpec spec = RepSpec::infinite({j});
    const Ket omega = gp_vector(spec);
    for (Mode n = 1; n <= 6; ++n) {
      o.record(apply_annihilate(n, apply_create(n, omega)) == RadicalScalar(static_cast<long>(j)) * omega,
               "a_n a_n* Omega = j Omega, j=" + std::to_string(j) + " n=" + std::to_string(n));
      if (j == 1) o.record(apply_annihilate(n, omega).is_zero(), "a_n Omega = 0, n=" + std::to_string(n));
    }
    const auto components = enumerate_components(spec);
    // all labels s_p Omega, |p| <= 4, letters <= 5
    std::function<void(Word&)> visit = [&](Word& p) {
      const EPWord target = canonicalize(p, {j});
      const auto w = cyclicity_witness(components[0], target);
      const Ket reached = apply_boson(w.monomial, omega);
      o.record(!w.lambda.is_zero() && reached == w.lambda * Ket(target), "cyclicity " + target.to_string());
      if (p.size() == 4) return;
      for (Letter l = 1; l <= 5; ++l) {
        p.push_back(l);
        visit(p);
        p.pop_back();
      }
    };
    Word p;
    visit(p);
  }
  return o;
}

Outcome restriction_two_cycle() {
  Outcome o;
  const auto components = branch(RepSpec::infinite({1, 2}));
  o.record(components.size() == 2, "component count " + std::to_string(components.size()));
  if (components.size() != 2) return o;
  o.record(components[0].vacuum == EPWord(Word{1, 2}) && components[1].vacuum == EPWord(Word{2, 1}), "vacua");
  o.record(components[0].classification.kind == BosonClass::F12 && components[1].classification.kind == BosonClass::F21,
           "classes");

  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"branch", "--rep", "|1,2"}, out, err);
  o.record(code == 0 && out.str().find("components: 2\n") != std::string::npos &&
               out.str().find("vacuum |1,2") != std::string::npos && out.str().find("vacuum |2,1") != std::string::npos,
           "command line branch output");

  const Ket omega(EPWord(Word{1, 2}));
  const Ket omega_prime(EPWord(Word{2, 1}));
  for (Mode n = 1; n <= 6; ++n) {
    const std::string where = " n=" + std::to_string(n);
    o.record(apply_annihilate(2 * n - 1, omega).is_zero(), "a_{2n-1} Omega = 0" + where);
    o.record(apply_create(2 * n, apply_annihilate(2 * n, omega)) == omega, "a_{2n}* a_{2n} Omega = Omega" + where);
    o.record(apply_annihilate(2 * n, omega_prime).is_zero(), "a_{2n} Omega' = 0" + where);
    o.record(apply_create(2 * n - 1, apply_annihilate(2 * n - 1, omega_prime)) == omega_prime,
             "a_{2n-1}* a_{2n-1} Omega' = Omega'" + where);
  }

  const Word t1 = tail_of(components[0].vacuum);
  const Word t2 = tail_of(components[1].vacuum);
  std::function<void(Word&)> visit = [&](Word& p) {
    for (const Word& rotation : {Word{1, 2}, Word{2, 1}}) {
      const EPWord label = canonicalize(p, rotation);
      const Word t = tail_of(label);
      const int hits = (t == t1) + (t == t2);
      o.record(hits == 1, "partition " + label.to_string());
      o.record(tail_equivalent(label, components[0].vacuum) == (t == t1), "tail test " + label.to_string());
    }
    if (p.size() == 4) return;
    for (Letter l = 1; l <= 5; ++l) {
      p.push_back(l);
      visit(p);
      p.pop_back();
    }
  };
  Word p;
  visit(p);
  return o;
}

Outcome inequivalence() {
  Outcome o;
  std::vector<std::pair<std::string, EPWord>> vacua{{"F_1", EPWord(Word{1})},
                                                    {"F_2", EPWord(Word{2})},
                                                    {"F_3", EPWord(Word{3})},
                                                    {"F_12", EPWord(Word{1, 2})},
                                                    {"F_21", EPWord(Word{2, 1})}};
  std::vector<std::vector<RadicalScalar>> lists;
  for (const auto& [name, vac] : vacua) {
    std::vector<RadicalScalar> ev;
    const Ket omega(vac);
    for (Mode n = 1; n <= 6; ++n) ev.push_back(inner(omega, apply_annihilate(n, apply_create(n, omega))));
    lists.push_back(ev);
  }
  for (std::size_t a = 0; a < vacua.size(); ++a) {
    for (std::size_t b = a + 1; b < vacua.size(); ++b) {
      o.record(lists[a] != lists[b], "eigenvalue lists " + vacua[a].first + " vs " + vacua[b].first);
    }
  }
  Sampler s(1004);
  const Ket omega(EPWord(Word{1, 2}));
  const Ket omega_prime(EPWord(Word{2, 1}));
  for (int i = 0; i < 100; ++i) {
    const BosonMonomial x = s.monomial(6, 4);
    const RadicalScalar ip = inner(apply_boson(x, omega), omega_prime);
    o.record(ip.is_zero(), "<x Omega, Omega'> for " + BosonPolynomial(x).to_string() + " = " + ip.to_string());
  }
  return o;
}

Outcome dictionary() {
  Outcome o;
  Sampler s(1005);
  const Ket omega(EPWord(Word{1}));
  for (int i = 0; i < 100; ++i) {
    const Occupations occ = s.occupations(5, 5);
    Ket lhs = omega;
    for (const auto& [mode, k] : occ) lhs = power(mode, true, k, lhs);
    const FockWord fw = fock_word(occ);
    o.record(lhs == fw.coefficient * Ket(EPWord(fw.word, {1})), "library dictionary [" + occupations_to_string(occ) + "]");
    // independent: letter n is n_n + 1, coefficient sqrt(prod k!)
    Word expected;
    std::uint64_t product = 1;
    const Mode top = occ.empty() ? 0 : occ.rbegin()->first;
    for (Mode n = 1; n <= top; ++n) {
      const std::uint32_t k = occ.count(n) ? occ.at(n) : 0;
      expected.push_back(k + 1);
      product *= oracle::factorial(k);
    }
    o.record(lhs == sqrt_nat(product) * Ket(canonicalize(expected, {1})),
             "independent dictionary [" + occupations_to_string(occ) + "]");
  }
  return o;
}

Outcome extension() {
  Outcome o;
  o.absorb(check_fock_extension(5, 3, 4, 4));
  return o;
}

Outcome embedding() {
  Outcome o;
  for (Letter N : {2u, 3u}) {
    Sampler s(1007);
    std::vector<Occupations> occs;
    for (int i = 0; i < 50; ++i) occs.push_back(s.occupations(5, 5));
    o.absorb(check_embedding(EmbeddingSpec(N), occs));
  }
  return o;
}

Outcome odometer() {
  Outcome o;
  o.absorb(check_odometer(6, 512, 9));
  // forward oracle for the one-particle states: e_{2^{n-1}+1} = s_1^{n-1} s_2 e_1
  for (Mode n = 1; n <= 9; ++n) {
    OdometerLabel e{1};
    e = *odometer_action(2, false, e);
    for (Mode i = 1; i < n; ++i) e = *odometer_action(1, false, e);
    o.record(e.index == (std::uint64_t{1} << (n - 1)) + 1, "s_1^{n-1} s_2 e_1, n=" + std::to_string(n));
  }
  return o;
}

Outcome bases() {
  Outcome o;
  for (Letter j : {1u, 2u}) o.absorb(check_lambda_basis(j, 4));
  for (Letter j : {1u, 2u}) {
    o.absorb(check_basis_family("type-" + std::to_string(j), basis_typej(j, 4, 3), EPWord(Word{j}), 4, 3));
  }
  o.absorb(check_basis_family("F_12", basis_onetwov(4, 3), EPWord(Word{1, 2}), 4, 3));
  o.absorb(check_basis_family("F_21", basis_onetwov(4, 3, true), EPWord(Word{2, 1}), 4, 3));
  for (Letter j : {2u, 3u}) {
    const Ket omega(EPWord(Word{j}));
    for (Mode n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 1; k <= 4; ++k) {
        const std::string where = "F_" + std::to_string(j) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
        o.record(inner(omega, power(n, false, k, omega)).is_zero(), "<Omega|a^k Omega> " + where);
        o.record(inner(omega, power(n, true, k, omega)).is_zero(), "<Omega|a*^k Omega> " + where);
      }
    }
  }
  return o;
}

Outcome canonical_forms() {
  Outcome o;
  Sampler s(1010);
  for (int i = 0; i < 1000; ++i) {
    const Word p1 = s.word(5, 3);
    const Word c1 = s.word(4, 3, 1);
    Word p2 = s.word(5, 3);
    Word c2 = s.word(4, 3, 1);
    if (s.coin()) {
      // the same infinite word written with a longer prefix and a rotated, repeated cycle
      const auto r = s.uniform(0, c1.size() - 1);
      p2 = p1;
      p2.insert(p2.end(), c1.begin(), c1.begin() + static_cast<std::ptrdiff_t>(r));
      c2 = c1;
      std::rotate(c2.begin(), c2.begin() + static_cast<std::ptrdiff_t>(r), c2.end());
      if (s.coin()) c2.insert(c2.end(), c2.begin(), c2.end());
    }
    const bool expansions = oracle::expand(p1, c1, 40) == oracle::expand(p2, c2, 40);
    const bool canonical = canonicalize(p1, c1) == canonicalize(p2, c2);
    o.record(expansions == canonical, word_to_string(p1) + "|" + word_to_string(c1) + " vs " + word_to_string(p2) + "|" +
                                          word_to_string(c2));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"CCR on |1, |2, |1,2: three commutators, n,m <= 6, 50 kets each, exact", ccr},
      {"P_inf(j), j=1,2,3: a_n a_n* Omega = j Omega, cyclicity at prefix <= 4, letters <= 5; Fock vacuum", restriction_type_j},
      {"P_inf(12): two components F_12, F_21, defining identities n <= 6, partition at prefix <= 4", restriction_two_cycle},
      {"inequivalence of F_1, F_2, F_3, F_12, F_21; 100 sampled <x Omega, Omega'> = 0", inequivalence},
      {"Fock state / word dictionary on 100 occupation lists", dictionary},
      {"extension of the O_inf action to Fock states, m <= 5, p <= 3, exponents <= 4", extension},
      {"embedding into O_2 and O_3 on 50 occupation lists", embedding},
      {"odometer model: intertwining n <= 6, indices <= 512; a_n* e_1 = e_{2^{n-1}+1}, n <= 9", odometer},
      {"orthonormal bases at modes <= 4, exponents <= 3; vacuum orthogonality in F_2, F_3", bases},
      {"canonical labels: 1000 pairs, equality iff 40-letter expansions agree", canonical_forms},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.record(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ["
              << o.checks << " checks, " << timing << "]";
    if (!o.passed) std::cout << " first failure: " << o.first_failure;
    std::cout << '\n';
    failed += o.passed ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed;
}
