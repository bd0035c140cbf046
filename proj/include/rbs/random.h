#pragma once

#include <cstdint>
#include <random>

#include "rbs/boson.h"
#include "rbs/cuntz.h"
#include "rbs/ket.h"

namespace rbs {

/// Seeded generators for property sweeps. Identical seeds give identical
/// streams within one build.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonzero sum of one or two terms (p/q) sqrt(r) with small p, q, r.
  RadicalScalar scalar();
  Word word(std::size_t max_length, Letter max_letter, std::size_t min_length = 0);
  /// Label of `spec`: random prefix followed by a random rotation of the cycle.
  EPWord label(const RepSpec& spec, std::size_t max_prefix, Letter max_letter);
  /// Nonzero ket with 1..max_labels terms.
  Ket ket(const RepSpec& spec, std::size_t max_labels, std::size_t max_prefix, Letter max_letter);
  /// Counts 0..max_count on modes 1..max_modes.
  Occupations occupations(Mode max_modes, std::uint32_t max_count);
  /// Normal-ordered monomial, creators and annihilators on disjoint modes <= max_mode.
  BosonMonomial monomial(Mode max_mode, std::uint32_t max_exponent);

  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rbs
