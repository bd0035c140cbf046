#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rbs {

using Letter = std::uint32_t;

/// Finite word over the naturals (letters >= 1). Index J of s_J = s_{j1}...s_{jk}.
using Word = std::vector<Letter>;

/// Alphabet X_N = {1..N}; an empty bound is the infinite alphabet of O_inf.
struct Alphabet {
  std::optional<Letter> bound;

  static Alphabet infinite() { return {}; }
  static Alphabet finite(Letter n) { return {n}; }

  bool is_finite() const { return bound.has_value(); }
  bool contains(Letter letter) const { return letter >= 1 && (!bound || letter <= *bound); }
  bool contains(const Word& word) const;
  std::string to_string() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

bool is_primitive(const Word& cycle);
/// Shortest word u with cycle = u^n.
Word primitive_root(const Word& cycle);
/// Distinct rotations of a primitive cycle, starting with the cycle itself.
std::vector<Word> rotations(const Word& cycle);
Word rotate_left(const Word& word, std::size_t steps);

/// Right-infinite eventually periodic word prefix . cycle . cycle ...
///
/// Always held in canonical form: the cycle is primitive and the prefix does
/// not end with the cycle's last letter, so two values are equal exactly when
/// they denote the same infinite word.
class EPWord {
 public:
  /// The purely periodic word cycle^inf.
  explicit EPWord(Word cycle);
  EPWord(Word prefix, Word cycle);

  const Word& prefix() const noexcept { return prefix_; }
  const Word& cycle() const noexcept { return cycle_; }
  bool is_periodic() const noexcept { return prefix_.empty(); }

  /// Letter at 1-based position n.
  Letter letter_at(std::size_t n) const;
  /// Same infinite word with the letter at position n replaced by value.
  EPWord set_letter(std::size_t n, Letter value) const;
  /// letter . this
  EPWord prepend(Letter letter) const;
  /// this with its first letter removed.
  EPWord drop_first() const;
  /// Largest letter occurring anywhere in the word.
  Letter max_letter() const;

  /// Ordering used for deterministic reports: prefix length, prefix, cycle.
  friend std::strong_ordering operator<=>(const EPWord& a, const EPWord& b);
  friend bool operator==(const EPWord& a, const EPWord& b) = default;

  /// `prefix|cycle`, letters comma-separated; `|1,2` for (1,2)^inf.
  std::string to_string() const;

 private:
  EPWord() = default;
  friend EPWord canonicalize(Word prefix, Word cycle);

  Word prefix_;
  Word cycle_;
};

EPWord canonicalize(Word prefix, Word cycle);
Letter letter_at(const EPWord& w, std::size_t n);
EPWord set_letter(const EPWord& w, std::size_t n, Letter value);

/// True when the two infinite words agree from some position on.
bool tail_equivalent(const EPWord& a, const EPWord& b);

/// Comma-separated letters; the empty word prints as "".
std::string word_to_string(const Word& word);
/// Inverse of word_to_string; throws ParseError.
Word parse_word(std::string_view text);
/// Inverse of EPWord::to_string; throws ParseError.
EPWord parse_epword(std::string_view text);

}  // namespace rbs
