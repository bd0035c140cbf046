#include <doctest.h>

#include "oracles.h"
#include "rbs/errors.h"
#include "rbs/random.h"
#include "rbs/words.h"

using namespace rbs;

TEST_SUITE("words") {
  TEST_CASE("canonical form") {
    const EPWord a = canonicalize({1, 2, 1, 2}, {1, 2});
    CHECK(a.prefix().empty());
    CHECK(a.cycle() == Word{1, 2});

    const EPWord b = canonicalize({3, 1}, {2, 1});
    CHECK(b.prefix() == Word{3});
    CHECK(b.cycle() == Word{1, 2});

    const EPWord c = canonicalize({}, {1, 1, 1});
    CHECK(c.cycle() == Word{1});

    CHECK(canonicalize({2, 2}, {2}) == EPWord(Word{2}));
    CHECK_THROWS_AS(canonicalize({1}, {}), DomainError);
    CHECK_THROWS_AS(canonicalize({0}, {1}), DomainError);
  }

  TEST_CASE("primitive roots and rotations") {
    CHECK(is_primitive({1, 2}));
    CHECK_FALSE(is_primitive({1, 2, 1, 2}));
    CHECK(primitive_root({3, 1, 3, 1, 3, 1}) == Word{3, 1});
    CHECK(rotations({1, 1, 2}) == std::vector<Word>{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
    CHECK_THROWS_AS(rotations({1, 1}), DomainError);
    CHECK(rotate_left({1, 2, 3}, 4) == Word{2, 3, 1});
  }

  TEST_CASE("letter access and replacement") {
    const EPWord w(Word{1, 2});
    CHECK(w.letter_at(1) == 1);
    CHECK(w.letter_at(4) == 2);
    const EPWord v = set_letter(w, 2, 1);
    CHECK(v.prefix() == Word{1, 1});
    CHECK(v.cycle() == Word{1, 2});
    CHECK(set_letter(v, 2, 2) == w);
    CHECK(w.prepend(2) == canonicalize({}, {2, 1}));
    CHECK(EPWord(Word{3}, Word{1}).drop_first() == EPWord(Word{1}));
    CHECK(canonicalize({4, 1}, {2, 3}).max_letter() == 4);
  }

  TEST_CASE("text round trip") {
    CHECK(EPWord(Word{1, 2}, Word{1}).to_string() == "1,2|1");
    CHECK(EPWord(Word{1, 2}).to_string() == "|1,2");
    CHECK(parse_epword("1,2|1") == EPWord(Word{1, 2}, Word{1}));
    CHECK(parse_epword(" 3 , 1 | 2,1 ") == canonicalize({3, 1}, {2, 1}));
    CHECK_THROWS_AS(parse_epword("1,2"), ParseError);
    CHECK_THROWS_AS(parse_epword("1|"), ParseError);
    CHECK_THROWS_AS(parse_epword("1,,2|1"), ParseError);
    CHECK_THROWS_AS(parse_epword("0|1"), ParseError);
    try {
      parse_epword("1,x|1");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
    }
  }

  TEST_CASE("ordering is by prefix length, then prefix, then cycle") {
    CHECK(EPWord(Word{9}) < EPWord(Word{1}, Word{2}));
    CHECK(EPWord(Word{1}, Word{2}) < EPWord(Word{2}, Word{1}));
    CHECK(EPWord(Word{1}) < EPWord(Word{1, 2}));
  }

  TEST_CASE("canonical equality iff raw expansions agree") {
    Sampler s(3);
    for (int i = 0; i < 2000; ++i) {
      const Word p1 = s.word(4, 3);
      const Word c1 = s.word(4, 3, 1);
      Word p2 = p1;
      Word c2 = c1;
      if (s.coin()) {
        const auto r = s.uniform(0, c2.size() - 1);
        p2.insert(p2.end(), c2.begin(), c2.end());
        p2.insert(p2.end(), c2.begin(), c2.begin() + static_cast<std::ptrdiff_t>(r));
        c2 = rotate_left(c2, r);
        c2.insert(c2.end(), c2.begin(), c2.end());
      } else {
        p2 = s.word(4, 3);
        c2 = s.word(4, 3, 1);
      }
      const bool same = oracle::expand(p1, c1, 40) == oracle::expand(p2, c2, 40);
      REQUIRE((canonicalize(p1, c1) == canonicalize(p2, c2)) == same);
      // canonical form denotes the same infinite word
      REQUIRE(oracle::expand(canonicalize(p1, c1), 40) == oracle::expand(p1, c1, 40));
    }
  }

  TEST_CASE("tail equivalence matches the raw tails") {
    Sampler s(4);
    for (int i = 0; i < 1000; ++i) {
      const EPWord a = canonicalize(s.word(4, 3), s.word(3, 2, 1));
      const EPWord b = canonicalize(s.word(4, 3), s.word(3, 2, 1));
      const Word ea = oracle::expand(a, 60);
      const Word eb = oracle::expand(b, 60);
      // past position 10 both are periodic with period dividing 6
      const bool tails = std::equal(ea.begin() + 20, ea.end(), eb.begin() + 20);
      REQUIRE(tail_equivalent(a, b) == tails);
    }
  }

  TEST_CASE("set_letter changes exactly one position") {
    Sampler s(8);
    for (int i = 0; i < 500; ++i) {
      const EPWord w = canonicalize(s.word(4, 4), s.word(3, 3, 1));
      const auto n = s.uniform(1, 10);
      const auto value = static_cast<Letter>(s.uniform(1, 5));
      Word expected = oracle::expand(w, 30);
      expected[n - 1] = value;
      REQUIRE(oracle::expand(set_letter(w, n, value), 30) == expected);
    }
  }

  TEST_CASE("alphabets") {
    CHECK(Alphabet::finite(3).contains(Word{1, 3}));
    CHECK_FALSE(Alphabet::finite(3).contains(Word{4}));
    CHECK(Alphabet::infinite().contains(Word{400}));
  }
}
