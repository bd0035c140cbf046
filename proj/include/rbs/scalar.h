#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace rbs {

using Rational = mpq_class;

/// Exact element of the ring spanned over the rationals by square roots of
/// squarefree naturals: sum_r q_r * sqrt(r).
///
/// Keys are squarefree radicands, radicand 1 is the rational part, and no
/// stored coefficient is zero. The empty map is 0.
class RadicalScalar {
 public:
  using Terms = std::map<std::uint64_t, Rational>;

  RadicalScalar() = default;
  RadicalScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit RadicalScalar(const Rational& value);

  /// q * sqrt(radicand); the radicand need not be squarefree.
  static RadicalScalar term(const Rational& q, std::uint64_t radicand);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of sqrt(1).
  Rational rational_part() const;
  double to_double() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& other);
  RadicalScalar& operator-=(const RadicalScalar& other);
  RadicalScalar& operator*=(const RadicalScalar& other);
  RadicalScalar& operator/=(const Rational& q);

  /// Reciprocal of a single-term value q*sqrt(r); throws DomainError for
  /// zero or for sums of several radicals.
  RadicalScalar inverse() const;

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator/(RadicalScalar a, const Rational& q) { return a /= q; }
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) { return a.terms_ == b.terms_; }

  /// `c0 + c1*sqrt(r1) - c2*sqrt(r2)`, terms sorted by radicand.
  std::string to_string() const;

 private:
  void add_term(std::uint64_t radicand, const Rational& q);

  Terms terms_;
};

/// Splits n = square^2 * squarefree.
struct SquarefreeSplit {
  std::uint64_t square_root = 1;
  std::uint64_t squarefree = 1;
};
SquarefreeSplit split_squarefree(std::uint64_t n);
bool is_squarefree(std::uint64_t n);

/// Exact sqrt(n), n >= 1.
RadicalScalar sqrt_nat(std::uint64_t n);
/// Exact sqrt(k!).
RadicalScalar sqrt_factorial(std::uint64_t k);
/// Exact sqrt(lo * (lo+1) * ... * hi); empty product (hi < lo) is 1.
RadicalScalar sqrt_product_range(std::uint64_t lo, std::uint64_t hi);

RadicalScalar add(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar mul(const RadicalScalar& a, const RadicalScalar& b);
RadicalScalar negate(const RadicalScalar& a);
inline bool is_zero(const RadicalScalar& a) { return a.is_zero(); }
inline double to_float(const RadicalScalar& a) { return a.to_double(); }

std::string rational_to_string(const Rational& q);

}  // namespace rbs
