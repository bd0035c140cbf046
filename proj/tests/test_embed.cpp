#include <doctest.h>

#include "oracles.h"
#include "rbs/embed.h"
#include "rbs/errors.h"
#include "rbs/literal.h"
#include "rbs/random.h"

using namespace rbs;

namespace {

// Forward map of the index formula: (k, i) -> (N-1)(k-1) + i.
Letter index_of(Letter N, const Word& w) {
  const auto k = static_cast<Letter>(w.size());
  return (N - 1) * (k - 1) + w.back();
}

}  // namespace

TEST_SUITE("embed") {
  TEST_CASE("generator images") {
    CHECK(embed_generator(EmbeddingSpec(2), 3) == Word{2, 2, 1});
    CHECK(embed_generator(EmbeddingSpec(3), 2) == Word{2});
    CHECK(embed_generator(EmbeddingSpec(3), 3) == Word{3, 1});
    CHECK(embed_generator(EmbeddingSpec(2), 1) == Word{1});
    CHECK_THROWS_AS(EmbeddingSpec(1), DomainError);
  }

  TEST_CASE("generator images invert the index formula") {
    for (Letter N = 2; N <= 6; ++N) {
      for (Letter m = 1; m <= 60; ++m) {
        const Word w = embed_generator(EmbeddingSpec(N), m);
        REQUIRE(w.back() < N);
        REQUIRE(std::all_of(w.begin(), w.end() - 1, [&](Letter l) { return l == N; }));
        REQUIRE(index_of(N, w) == m);
      }
    }
  }

  TEST_CASE("word translation") {
    CHECK(translate_word(EmbeddingSpec(2), {2, 3}) == Word{2, 1, 2, 2, 1});
    CHECK(translate_word(EmbeddingSpec(4), {}).empty());
    CHECK(translate_word(EmbeddingSpec(2), {1}) == Word{1});
  }

  TEST_CASE("Fock words in O_N") {
    // N = 2, one mode n with count k: t_1^{n-1} t_2^k t_1
    CHECK(fock_word_in_ON(EmbeddingSpec(2), {{3, 2}}) == Word{1, 1, 2, 2, 1});
    // N = 3, count 1: c = 1, b = 2
    CHECK(fock_word_in_ON(EmbeddingSpec(3), {{1, 1}}) == Word{2});
    CHECK(fock_word_in_ON(EmbeddingSpec(3), {}).empty());
    // equal to the N = 2 short form once the trailing t_1 is absorbed by the GP vector
    for (Letter n = 1; n <= 4; ++n) {
      for (std::uint32_t k = 1; k <= 4; ++k) {
        Word short_form(n - 1, 1);
        short_form.insert(short_form.end(), k, 2);
        REQUIRE(canonicalize(fock_word_in_ON(EmbeddingSpec(2), {{n, k}}), {1}) == canonicalize(short_form, {1}));
      }
    }
  }

  TEST_CASE("embedded creators reproduce Fock states") {
    Sampler s(41);
    std::vector<Occupations> occs;
    for (int i = 0; i < 30; ++i) occs.push_back(s.occupations(4, 4));
    for (Letter N : {2u, 3u, 5u}) CHECK(check_embedding(EmbeddingSpec(N), occs).all_passed());
  }

  TEST_CASE("embedded relations") {
    Sampler s(42);
    for (Letter N : {2u, 3u}) {
      const EmbeddingSpec spec(N);
      std::vector<Ket> kets;
      for (int i = 0; i < 15; ++i) kets.push_back(s.ket(spec.ambient(), 5, 5, N));
      CHECK(check_embedding_relations(spec, 7, kets).all_passed());
    }
  }

  TEST_CASE("embedded boson operators obey the CCR in other O_N representations") {
    Sampler s(43);
    const RepSpec ambient(Alphabet::finite(3), {1, 3});
    const EmbeddedAction action(EmbeddingSpec(3), ambient);
    for (int i = 0; i < 20; ++i) {
      const Ket v = s.ket(ambient, 4, 4, 3);
      for (Mode n = 1; n <= 3; ++n) {
        for (Mode m = 1; m <= 3; ++m) {
          const Ket lhs = literal_boson(action, n, false, literal_boson(action, m, true, v)) -
                          literal_boson(action, m, true, literal_boson(action, n, false, v));
          REQUIRE(lhs == (n == m ? v : Ket()));
        }
      }
    }
    CHECK_THROWS_AS(EmbeddedAction(EmbeddingSpec(2), ambient), DomainError);
    CHECK(EmbeddedAction(EmbeddingSpec(2), RepSpec(Alphabet::finite(2), {2})).leading_index_bound(EPWord(Word{2})) == 0);
  }

  TEST_CASE("odometer action") {
    CHECK(odometer_action(2, false, {1})->index == 2);
    CHECK(odometer_action(1, false, {1})->index == 1);
    CHECK(odometer_action(1, false, *odometer_action(2, false, {1}))->index == 3);
    CHECK(odometer_action(3, true, {12})->index == 2);
    CHECK_FALSE(odometer_action(2, true, {12}).has_value());
    CHECK_THROWS_AS(odometer_action(64, false, {2}), std::overflow_error);
  }

  TEST_CASE("odometer isomorphism") {
    CHECK(odometer_isomorphism({1}) == EPWord(Word{1}));
    CHECK(odometer_isomorphism({2}) == EPWord(Word{2}, Word{1}));
    CHECK(odometer_isomorphism({3}) == EPWord(Word{1, 2}, Word{1}));
    // forward oracle: every word over {1..4} of length <= 4 lands on its own index
    for (Word w : {Word{4, 1, 3}, Word{2, 2, 2}, Word{1, 1, 3, 1, 2}}) {
      OdometerLabel e{1};
      for (auto it = w.rbegin(); it != w.rend(); ++it) e = *odometer_action(*it, false, e);
      CHECK(odometer_isomorphism(e) == canonicalize(w, {1}));
    }
    CHECK_THROWS_AS(odometer_from_word(EPWord(Word{2})), DomainError);
    CHECK(check_odometer(6, 512, 9).all_passed());
  }
}
