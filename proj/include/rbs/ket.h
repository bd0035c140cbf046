#pragma once

#include <map>
#include <string>
#include <utility>

#include "rbs/scalar.h"
#include "rbs/words.h"

namespace rbs {

/// Finite linear combination of reference-basis vectors with exact
/// amplitudes. The reference basis is orthonormal, so the inner product is
/// the amplitude-wise sum over shared labels. No zero amplitudes are stored.
template <class Label>
class BasicKet {
 public:
  using label_type = Label;
  using Amplitudes = std::map<Label, RadicalScalar>;

  BasicKet() = default;
  explicit BasicKet(Label label, RadicalScalar amplitude = RadicalScalar(1L)) {
    add(std::move(label), amplitude);
  }

  const Amplitudes& amplitudes() const noexcept { return amps_; }
  bool is_zero() const noexcept { return amps_.empty(); }
  std::size_t size() const noexcept { return amps_.size(); }
  auto begin() const { return amps_.begin(); }
  auto end() const { return amps_.end(); }

  RadicalScalar amplitude(const Label& label) const {
    auto it = amps_.find(label);
    return it == amps_.end() ? RadicalScalar() : it->second;
  }

  void add(Label label, const RadicalScalar& amplitude) {
    if (amplitude.is_zero()) return;
    auto [it, inserted] = amps_.try_emplace(std::move(label), amplitude);
    if (inserted) return;
    it->second += amplitude;
    if (it->second.is_zero()) amps_.erase(it);
  }

  BasicKet& operator+=(const BasicKet& other) {
    for (const auto& [label, c] : other.amps_) add(label, c);
    return *this;
  }
  BasicKet& operator-=(const BasicKet& other) {
    for (const auto& [label, c] : other.amps_) add(label, -c);
    return *this;
  }
  BasicKet& operator*=(const RadicalScalar& c) {
    if (c.is_zero()) {
      amps_.clear();
      return *this;
    }
    for (auto& [label, a] : amps_) a *= c;
    return *this;
  }

  friend BasicKet operator+(BasicKet a, const BasicKet& b) { return a += b; }
  friend BasicKet operator-(BasicKet a, const BasicKet& b) { return a -= b; }
  friend BasicKet operator*(const RadicalScalar& c, BasicKet v) { return v *= c; }
  friend bool operator==(const BasicKet&, const BasicKet&) = default;

 private:
  Amplitudes amps_;
};

using Ket = BasicKet<EPWord>;

template <class Label>
BasicKet<Label> ket_add(const BasicKet<Label>& u, const BasicKet<Label>& v) {
  return u + v;
}

template <class Label>
BasicKet<Label> ket_scale(const RadicalScalar& c, const BasicKet<Label>& v) {
  return c * v;
}

template <class Label>
RadicalScalar inner(const BasicKet<Label>& u, const BasicKet<Label>& v) {
  const auto& small = u.size() <= v.size() ? u : v;
  const auto& large = u.size() <= v.size() ? v : u;
  RadicalScalar out;
  for (const auto& [label, c] : small) {
    auto it = large.amplitudes().find(label);
    if (it != large.amplitudes().end()) out += c * it->second;
  }
  return out;
}

template <class Label>
RadicalScalar norm_squared(const BasicKet<Label>& v) {
  return inner(v, v);
}

/// Human form: one `coeff * |label>` line per term, `0` for the zero ket.
std::string to_string(const Ket& v);
std::string scalar_factor_string(const RadicalScalar& c);

}  // namespace rbs
