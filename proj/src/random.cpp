#include "rbs/random.h"

#include <array>

namespace rbs {

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

RadicalScalar Sampler::scalar() {
  static constexpr std::array<std::uint64_t, 6> radicands{1, 2, 3, 5, 6, 7};
  RadicalScalar out;
  while (out.is_zero()) {
    const auto terms = uniform(1, 2);
    for (std::uint64_t t = 0; t < terms; ++t) {
      const long p = static_cast<long>(uniform(1, 5)) * (coin() ? 1 : -1);
      const long q = static_cast<long>(uniform(1, 4));
      Rational coeff(p, q);
      coeff.canonicalize();
      out += RadicalScalar::term(coeff, radicands[uniform(0, radicands.size() - 1)]);
    }
  }
  return out;
}

Word Sampler::word(std::size_t max_length, Letter max_letter, std::size_t min_length) {
  Word out(uniform(min_length, max_length));
  for (auto& l : out) l = static_cast<Letter>(uniform(1, max_letter));
  return out;
}

EPWord Sampler::label(const RepSpec& spec, std::size_t max_prefix, Letter max_letter) {
  Letter top = max_letter;
  if (spec.alphabet().bound) top = std::min(top, *spec.alphabet().bound);
  Word prefix = word(max_prefix, top);
  const Word cycle = rotate_left(spec.cycle(), uniform(0, spec.cycle().size() - 1));
  return canonicalize(std::move(prefix), cycle);
}

Ket Sampler::ket(const RepSpec& spec, std::size_t max_labels, std::size_t max_prefix, Letter max_letter) {
  Ket out;
  while (out.is_zero()) {
    const auto count = uniform(1, max_labels);
    for (std::uint64_t i = 0; i < count; ++i) out.add(label(spec, max_prefix, max_letter), scalar());
  }
  return out;
}

Occupations Sampler::occupations(Mode max_modes, std::uint32_t max_count) {
  Occupations out;
  for (Mode n = 1; n <= max_modes; ++n) {
    const auto count = static_cast<std::uint32_t>(uniform(0, max_count));
    if (count > 0) out[n] = count;
  }
  return out;
}

BosonMonomial Sampler::monomial(Mode max_mode, std::uint32_t max_exponent) {
  BosonMonomial out;
  for (Mode n = 1; n <= max_mode; ++n) {
    switch (uniform(0, 2)) {
      case 1:
        out.creators[n] = static_cast<std::uint32_t>(uniform(1, max_exponent));
        break;
      case 2:
        out.annihilators[n] = static_cast<std::uint32_t>(uniform(1, max_exponent));
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace rbs
