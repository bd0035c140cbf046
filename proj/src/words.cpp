#include "rbs/words.h"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "rbs/errors.h"

namespace rbs {

bool Alphabet::contains(const Word& word) const {
  return std::all_of(word.begin(), word.end(), [this](Letter l) { return contains(l); });
}

std::string Alphabet::to_string() const { return bound ? std::to_string(*bound) : "inf"; }

Word primitive_root(const Word& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool repeats = true;
    for (std::size_t i = period; i < n && repeats; ++i) repeats = cycle[i] == cycle[i - period];
    if (repeats) return Word(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(period));
  }
  return cycle;
}

bool is_primitive(const Word& cycle) {
  return !cycle.empty() && primitive_root(cycle).size() == cycle.size();
}

Word rotate_left(const Word& word, std::size_t steps) {
  Word out = word;
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(steps % out.size()), out.end());
  }
  return out;
}

std::vector<Word> rotations(const Word& cycle) {
  if (!is_primitive(cycle)) throw DomainError("rotations requires a nonempty primitive cycle");
  std::vector<Word> out;
  out.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back(rotate_left(cycle, i));
  return out;
}

EPWord canonicalize(Word prefix, Word cycle) {
  if (cycle.empty()) throw DomainError("eventually periodic word needs a nonempty cycle");
  auto zero = [](Letter l) { return l == 0; };
  if (std::any_of(prefix.begin(), prefix.end(), zero) || std::any_of(cycle.begin(), cycle.end(), zero)) {
    throw DomainError("letters must be >= 1");
  }
  cycle = primitive_root(cycle);
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    prefix.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  EPWord out;
  out.prefix_ = std::move(prefix);
  out.cycle_ = std::move(cycle);
  return out;
}

EPWord::EPWord(Word cycle) : EPWord(canonicalize({}, std::move(cycle))) {}

EPWord::EPWord(Word prefix, Word cycle) : EPWord(canonicalize(std::move(prefix), std::move(cycle))) {}

Letter EPWord::letter_at(std::size_t n) const {
  if (n == 0) throw DomainError("positions are 1-based");
  if (n <= prefix_.size()) return prefix_[n - 1];
  return cycle_[(n - prefix_.size() - 1) % cycle_.size()];
}

EPWord EPWord::set_letter(std::size_t n, Letter value) const {
  if (n == 0) throw DomainError("positions are 1-based");
  if (value == 0) throw DomainError("letters must be >= 1");
  Word prefix = prefix_;
  Word cycle = cycle_;
  if (n > prefix.size()) {
    // Unroll the cycle until the prefix covers position n.
    const std::size_t extra = n - prefix.size();
    for (std::size_t i = 0; i < extra; ++i) prefix.push_back(cycle_[i % cycle_.size()]);
    cycle = rotate_left(cycle_, extra);
  }
  prefix[n - 1] = value;
  return canonicalize(std::move(prefix), std::move(cycle));
}

EPWord EPWord::prepend(Letter letter) const {
  Word prefix;
  prefix.reserve(prefix_.size() + 1);
  prefix.push_back(letter);
  prefix.insert(prefix.end(), prefix_.begin(), prefix_.end());
  return canonicalize(std::move(prefix), cycle_);
}

EPWord EPWord::drop_first() const {
  EPWord out = *this;
  if (!out.prefix_.empty()) {
    out.prefix_.erase(out.prefix_.begin());
  } else {
    out.cycle_ = rotate_left(out.cycle_, 1);
  }
  return out;
}

Letter EPWord::max_letter() const {
  Letter out = *std::max_element(cycle_.begin(), cycle_.end());
  for (Letter l : prefix_) out = std::max(out, l);
  return out;
}

std::strong_ordering operator<=>(const EPWord& a, const EPWord& b) {
  if (auto c = a.prefix_.size() <=> b.prefix_.size(); c != 0) return c;
  if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
  return a.cycle_ <=> b.cycle_;
}

std::string EPWord::to_string() const { return word_to_string(prefix_) + "|" + word_to_string(cycle_); }

Letter letter_at(const EPWord& w, std::size_t n) { return w.letter_at(n); }

EPWord set_letter(const EPWord& w, std::size_t n, Letter value) { return w.set_letter(n, value); }

bool tail_equivalent(const EPWord& a, const EPWord& b) {
  const std::size_t start = std::max(a.prefix().size(), b.prefix().size()) + 1;
  const std::size_t window = std::lcm(a.cycle().size(), b.cycle().size());
  for (std::size_t n = start; n < start + window; ++n) {
    if (a.letter_at(n) != b.letter_at(n)) return false;
  }
  return true;
}

std::string word_to_string(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

namespace {

Word parse_word_at(std::string_view text, std::size_t offset) {
  Word out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    Letter value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || value == 0) throw ParseError("expected a letter >= 1", offset + pos);
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", offset + pos);
    ++pos;
  }
  return out;
}

}  // namespace

Word parse_word(std::string_view text) { return parse_word_at(text, 0); }

EPWord parse_epword(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected 'prefix|cycle'", text.size());
  Word prefix = parse_word_at(text.substr(0, bar), 0);
  Word cycle = parse_word_at(text.substr(bar + 1), bar + 1);
  if (cycle.empty()) throw ParseError("empty cycle", bar + 1);
  return canonicalize(std::move(prefix), std::move(cycle));
}

}  // namespace rbs
