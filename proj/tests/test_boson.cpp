#include <doctest.h>

#include "oracles.h"
#include "rbs/boson.h"
#include "rbs/errors.h"
#include "rbs/literal.h"
#include "rbs/random.h"

using namespace rbs;

namespace {

std::vector<Ket> kets(const RepSpec& spec, std::uint64_t seed, int count = 30) {
  Sampler s(seed);
  std::vector<Ket> out;
  for (int i = 0; i < count; ++i) out.push_back(s.ket(spec, 8, 5, 6));
  return out;
}

}  // namespace

TEST_SUITE("boson") {
  TEST_CASE("closed-form rule on single labels") {
    const Ket omega(EPWord(Word{1}));
    CHECK(apply_create(2, omega) == Ket(EPWord(Word{1, 2}, Word{1})));
    CHECK(apply_annihilate(1, omega).is_zero());
    const Ket three(EPWord(Word{3}));
    CHECK(apply_annihilate(1, three) == sqrt_nat(2) * Ket(EPWord(Word{2}, Word{3})));
    CHECK(apply_create(1, three) == sqrt_nat(3) * Ket(EPWord(Word{4}, Word{3})));
  }

  TEST_CASE("normal ordering") {
    const std::vector<BosonFactor> aa_cc{{1, false}, {1, false}, {1, true}, {1, true}};
    CHECK(normal_order(aa_cc).to_string() == "a1* a1* a1 a1 + 4 a1* a1 + 2");
    const std::vector<BosonFactor> mixed{{1, false}, {2, true}};
    CHECK(normal_order(mixed).to_string() == "a2* a1");
    const std::vector<BosonFactor> number{{3, false}, {3, true}};
    CHECK(normal_order(number).to_string() == "a3* a3 + 1");
    CHECK(normal_order({}, RadicalScalar(5L)).to_string() == "5");
  }

  TEST_CASE("normal-ordered polynomial acts like the raw product") {
    Sampler s(31);
    const RepSpec spec = RepSpec::infinite({2, 1});
    for (int i = 0; i < 200; ++i) {
      std::vector<BosonFactor> f;
      for (auto k = s.uniform(1, 5); k > 0; --k) {
        f.push_back({static_cast<Mode>(s.uniform(1, 3)), s.coin()});
      }
      const Ket v = s.ket(spec, 4, 4, 4);
      REQUIRE(apply_boson(normal_order(f), v) == apply_boson_product(f, v));
    }
  }

  TEST_CASE("closed form agrees with the textbook Fock space") {
    Sampler s(32);
    const Ket omega(EPWord(Word{1}));
    for (int i = 0; i < 200; ++i) {
      Ket v = omega;
      auto fock = oracle::FockVector::vacuum();
      for (auto k = s.uniform(1, 6); k > 0; --k) {
        const auto mode = static_cast<Mode>(s.uniform(1, 4));
        const bool create = s.uniform(0, 2) > 0;
        v = create ? apply_create(mode, v) : apply_annihilate(mode, v);
        fock = fock.apply(mode, create);
      }
      const auto got = oracle::as_fock(v);
      std::size_t nonzero = 0;
      for (const auto& [occ, c] : fock.amps) {
        if (std::abs(c) < 1e-12) continue;
        ++nonzero;
        REQUIRE(got.count(occ) == 1);
        REQUIRE(got.at(occ) == doctest::Approx(c));
      }
      REQUIRE(got.size() == nonzero);
    }
  }

  TEST_CASE("commutation relations, adjointness and the defining sums") {
    for (const auto& spec : {RepSpec::infinite({1}), RepSpec::infinite({3}), RepSpec::infinite({1, 2})}) {
      const auto sample = kets(spec, 33);
      const Report ccr = check_ccr(sample, 5);
      CHECK(ccr.all_passed());
      CHECK(check_boson_adjointness(sample, 5).all_passed());
      CHECK(check_literal_agreement(spec, sample, 5).all_passed());
      CHECK(check_intertwining(spec, sample, 4, 4).all_passed());
    }
  }

  TEST_CASE("Fock words") {
    const FockWord a = fock_word({{1, 1}, {2, 2}});
    CHECK(a.word == Word{2, 3});
    CHECK(a.coefficient == sqrt_nat(2));
    const FockWord b = fock_word({});
    CHECK(b.word.empty());
    CHECK(b.coefficient == RadicalScalar(1L));
    CHECK(fock_word({{3, 1}}).word == Word{1, 1, 2});
    CHECK(fock_word({{2, 4}, {4, 3}}).coefficient == sqrt_nat(24 * 6));
  }

  TEST_CASE("Fock dictionary on random occupations") {
    Sampler s(34);
    std::vector<Occupations> occs;
    for (int i = 0; i < 100; ++i) occs.push_back(s.occupations(5, 5));
    CHECK(check_fock_dictionary(occs).all_passed());
  }

  TEST_CASE("extension of the O_inf action to Fock states") {
    // s_3 Omega = (2!)^{-1/2} (a_1*)^2 Omega
    const BosonPolynomial p = fock_extension_action(3, false, {});
    CHECK(p == BosonPolynomial(BosonMonomial{sqrt_nat(2).inverse(), {{1, 2}}, {}}));
    // s_1* on a state with n_1 >= 2 shifts modes down
    CHECK(fock_extension_action(1, true, {{3, 2}}) == BosonPolynomial(BosonMonomial{RadicalScalar(1L), {{2, 2}}, {}}));
    CHECK(fock_extension_action(2, true, {{3, 2}}).is_zero());
    // s_3* (a_1*)^2 (a_2*) Omega = sqrt(2) a_1* Omega
    CHECK(fock_extension_action(3, true, {{1, 2}, {2, 1}}) ==
          BosonPolynomial(BosonMonomial{sqrt_nat(2), {{1, 1}}, {}}));
    CHECK(check_fock_extension(4, 2, 3, 3).all_passed());
  }

  TEST_CASE("occupation text") {
    CHECK(parse_occupations("1:1,2:2") == Occupations{{1, 1}, {2, 2}});
    CHECK(parse_occupations("").empty());
    CHECK(parse_occupations("4:0").empty());
    CHECK(occupations_to_string({{1, 1}, {3, 2}}) == "1:1,3:2");
    CHECK_THROWS_AS(parse_occupations("1:1,1:2"), ParseError);
    CHECK_THROWS_AS(parse_occupations("0:1"), ParseError);
    CHECK_THROWS_AS(parse_occupations("1-1"), ParseError);
  }

  TEST_CASE("literal sums need the infinite alphabet") {
    CHECK_THROWS_AS(WordAction(RepSpec(Alphabet::finite(2), {1})), DomainError);
  }
}
