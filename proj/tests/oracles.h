#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's own algorithms for the quantity being checked.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "rbs/boson.h"
#include "rbs/ket.h"
#include "rbs/scalar.h"
#include "rbs/words.h"

namespace oracle {

using rbs::Letter;
using rbs::Word;

/// First `length` letters of prefix . cycle . cycle ..., straight from the raw pair.
inline Word expand(const Word& prefix, const Word& cycle, std::size_t length) {
  Word out;
  for (std::size_t i = 0; i < length; ++i) {
    out.push_back(i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()]);
  }
  return out;
}

inline Word expand(const rbs::EPWord& w, std::size_t length) { return expand(w.prefix(), w.cycle(), length); }

/// Largest square dividing n, by plain trial division over all d.
inline std::uint64_t largest_square_root(std::uint64_t n) {
  std::uint64_t root = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % (d * d) == 0) {
      n /= d * d;
      root *= d;
    }
  }
  return root;
}

inline double to_double(const rbs::RadicalScalar& c) {
  double out = 0;
  for (const auto& [r, q] : c.terms()) out += q.get_d() * std::sqrt(static_cast<double>(r));
  return out;
}

inline std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

/// Occupation numbers read off a P_inf(1) label: position n holds n_n + 1.
inline std::map<std::uint32_t, std::uint32_t> occupations_of(const rbs::EPWord& w) {
  std::map<std::uint32_t, std::uint32_t> out;
  for (std::size_t n = 1; n <= w.prefix().size(); ++n) {
    const Letter l = w.prefix()[n - 1];
    if (l > 1) out[static_cast<std::uint32_t>(n)] = l - 1;
  }
  return out;
}

/// Textbook Fock space: sparse vectors over occupation maps, with
/// a_n|..k..> = sqrt(k)|..k-1..>, a_n^*|..k..> = sqrt(k+1)|..k+1..>.
/// Coefficients are held as (rational, integer radicand) products so the
/// arithmetic stays independent of the library's squarefree reduction.
struct FockVector {
  std::map<std::map<std::uint32_t, std::uint32_t>, double> amps;

  static FockVector vacuum() {
    FockVector v;
    v.amps[{}] = 1.0;
    return v;
  }

  FockVector apply(std::uint32_t mode, bool create) const {
    FockVector out;
    for (const auto& [occ, c] : amps) {
      auto next = occ;
      const std::uint32_t k = occ.count(mode) ? occ.at(mode) : 0;
      if (create) {
        next[mode] = k + 1;
        out.amps[next] += c * std::sqrt(static_cast<double>(k + 1));
      } else {
        if (k == 0) continue;
        if (k == 1) {
          next.erase(mode);
        } else {
          next[mode] = k - 1;
        }
        out.amps[next] += c * std::sqrt(static_cast<double>(k));
      }
    }
    return out;
  }
};

/// Same state read through the P_inf(1) dictionary, in floating point.
inline std::map<std::map<std::uint32_t, std::uint32_t>, double> as_fock(const rbs::Ket& v) {
  std::map<std::map<std::uint32_t, std::uint32_t>, double> out;
  for (const auto& [label, c] : v) out[occupations_of(label)] += to_double(c);
  return out;
}

}  // namespace oracle
