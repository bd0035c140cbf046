#include "rbs/scalar.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "rbs/errors.h"

namespace rbs {

namespace {

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    constexpr std::size_t limit = 1 << 16;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::size_t p = 2; p <= limit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
    return out;
  }();
  return primes;
}

Rational nat(std::uint64_t n) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return Rational(mpz_class(static_cast<unsigned long>(n)));
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("radicand overflow in exact arithmetic");
  }
  return out;
}

}  // namespace

SquarefreeSplit split_squarefree(std::uint64_t n) {
  if (n == 0) throw DomainError("squarefree split of 0");
  SquarefreeSplit out;
  auto absorb = [&](std::uint64_t p) {
    int exponent = 0;
    while (n % p == 0) {
      n /= p;
      ++exponent;
    }
    for (int e = 0; e + 1 < exponent; e += 2) out.square_root *= p;
    if (exponent % 2 == 1) out.squarefree *= p;
  };
  for (std::uint64_t p : small_primes()) {
    if (p * p > n) break;
    absorb(p);
  }
  // Past the table, odd trial divisors are enough.
  for (std::uint64_t p = small_primes().back() + 2; p <= n / p; p += 2) absorb(p);
  if (n > 1) out.squarefree *= n;
  return out;
}

bool is_squarefree(std::uint64_t n) { return n != 0 && split_squarefree(n).square_root == 1; }

RadicalScalar::RadicalScalar(long value) : RadicalScalar(Rational(value)) {}

RadicalScalar::RadicalScalar(const Rational& value) {
  if (value != 0) terms_.emplace(1, value);
}

RadicalScalar RadicalScalar::term(const Rational& q, std::uint64_t radicand) {
  RadicalScalar out;
  if (q == 0) return out;
  const auto split = split_squarefree(radicand);
  out.add_term(split.squarefree, q * nat(split.square_root));
  return out;
}

void RadicalScalar::add_term(std::uint64_t radicand, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(radicand, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

bool RadicalScalar::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational RadicalScalar::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

double RadicalScalar::to_double() const {
  double out = 0.0;
  for (const auto& [r, q] : terms_) out += q.get_d() * std::sqrt(static_cast<double>(r));
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& [r, q] : out.terms_) q = -q;
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& other) {
  for (const auto& [r, q] : other.terms_) add_term(r, q);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& other) {
  for (const auto& [r, q] : other.terms_) add_term(r, -q);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& other) {
  RadicalScalar out;
  for (const auto& [r1, q1] : terms_) {
    for (const auto& [r2, q2] : other.terms_) {
      // sqrt(r1) sqrt(r2) = g sqrt((r1/g)(r2/g)); the cofactors are coprime
      // and squarefree, so their product is squarefree.
      const std::uint64_t g = std::gcd(r1, r2);
      const std::uint64_t radicand = checked_mul(r1 / g, r2 / g);
      out.add_term(radicand, q1 * q2 * nat(g));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RadicalScalar& RadicalScalar::operator/=(const Rational& q) {
  if (q == 0) throw DomainError("division by zero");
  for (auto& [r, c] : terms_) c /= q;
  return *this;
}

RadicalScalar RadicalScalar::inverse() const {
  if (terms_.size() != 1) {
    throw DomainError("inverse is only defined for a single nonzero term q*sqrt(r)");
  }
  const auto& [r, q] = *terms_.begin();
  // 1/(q sqrt(r)) = sqrt(r) / (q r)
  RadicalScalar out;
  out.add_term(r, Rational(1) / (q * nat(r)));
  return out;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    const bool negative = q < 0;
    const Rational magnitude = negative ? Rational(-q) : q;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (r == 1) {
      os << rational_to_string(magnitude);
    } else {
      if (magnitude != 1) os << rational_to_string(magnitude) << '*';
      os << "sqrt(" << r << ')';
    }
  }
  return os.str();
}

RadicalScalar sqrt_nat(std::uint64_t n) {
  if (n == 0) throw DomainError("sqrt_nat requires n >= 1");
  return RadicalScalar::term(Rational(1), n);
}

RadicalScalar sqrt_product_range(std::uint64_t lo, std::uint64_t hi) {
  RadicalScalar out(1L);
  for (std::uint64_t i = lo; i <= hi; ++i) {
    if (i == 0) return RadicalScalar();
    out *= sqrt_nat(i);
  }
  return out;
}

RadicalScalar sqrt_factorial(std::uint64_t k) { return sqrt_product_range(2, k); }

RadicalScalar add(const RadicalScalar& a, const RadicalScalar& b) { return a + b; }
RadicalScalar mul(const RadicalScalar& a, const RadicalScalar& b) { return a * b; }
RadicalScalar negate(const RadicalScalar& a) { return -a; }

}  // namespace rbs
