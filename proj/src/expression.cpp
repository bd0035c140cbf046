#include "rbs/expression.h"

#include <cctype>
#include <charconv>

#include "rbs/errors.h"
#include "rbs/literal.h"

namespace rbs {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  OperatorExpression parse() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    OperatorExpression out{expr()};
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return out;
  }

 private:
  using Terms = std::vector<OperatorTerm>;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  bool at_factor() {
    skip();
    if (pos_ == text_.size()) return false;
    const char c = text_[pos_];
    return c == 's' || c == 'a' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  Terms expr() {
    Terms out = term();
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_] == '-';
      ++pos_;
      Terms next = term();
      for (auto& t : next) {
        if (minus) t.coeff = -t.coeff;
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  Terms term() {
    bool minus = false;
    if (peek('-')) {
      minus = true;
      ++pos_;
    }
    if (!at_factor()) throw ParseError("expected a factor", pos_);
    Terms out{OperatorTerm{}};
    while (true) {
      out = product(out, factor());
      if (peek('*')) {
        ++pos_;
        if (!at_factor()) throw ParseError("expected a factor after '*'", pos_);
        continue;
      }
      if (!at_factor()) break;
    }
    if (minus) {
      for (auto& t : out) t.coeff = -t.coeff;
    }
    return out;
  }

  static Terms product(const Terms& left, const Terms& right) {
    Terms out;
    for (const auto& a : left) {
      for (const auto& b : right) {
        OperatorTerm t{a.coeff * b.coeff, a.factors};
        t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
        out.push_back(std::move(t));
      }
    }
    return out;
  }

  std::string digits(const char* what) {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return std::string(text_.substr(start, pos_ - start));
  }

  Terms factor() {
    skip();
    const std::size_t start = pos_;
    if (starts_with("sqrt")) {
      pos_ += 4;
      if (!peek('(')) throw ParseError("expected '(' after sqrt", pos_);
      ++pos_;
      const std::size_t arg_pos = pos_;
      const std::string n = digits("a natural number");
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), value);
      if (ec != std::errc()) throw ParseError("radicand out of range", arg_pos);
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return {OperatorTerm{value == 0 ? RadicalScalar() : sqrt_nat(value), {}}};
    }
    const char c = text_[pos_];
    if (c == 's' || c == 'a') {
      ++pos_;
      const std::size_t index_pos = pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError(std::string("expected an index after '") + c + "'", index_pos);
      }
      const std::string n = digits("an index");
      std::uint32_t index = 0;
      auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), index);
      if (ec != std::errc() || index == 0) throw ParseError("index must be in 1..2^32-1", index_pos);
      OperatorFactor f{c == 's' ? OperatorFactor::Kind::S : OperatorFactor::Kind::A, index, false};
      if (pos_ < text_.size() && text_[pos_] == '*') {
        f.star = true;
        ++pos_;
      }
      return {OperatorTerm{RadicalScalar(1L), {f}}};
    }
    if (c == '(') {
      ++pos_;
      Terms inside = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inside;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string number = digits("a number");
      if (peek('/')) {
        ++pos_;
        const std::size_t den_pos = pos_;
        const std::string den = digits("a denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_pos);
        number += "/" + den;
      }
      Rational q(number);
      q.canonicalize();
      return {OperatorTerm{RadicalScalar(q), {}}};
    }
    throw ParseError(std::string("unexpected '") + c + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string factor_string(const OperatorFactor& f) {
  return std::string(f.kind == OperatorFactor::Kind::S ? "s" : "a") + std::to_string(f.index) + (f.star ? "*" : "");
}

}  // namespace

OperatorExpression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string OperatorExpression::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& term : terms) {
    OperatorTerm t = term;
    if (!out.empty()) {
      const bool negative = t.coeff.terms().size() == 1 && t.coeff.terms().begin()->second < 0;
      out += negative ? " - " : " + ";
      if (negative) t.coeff = -t.coeff;
    }
    std::string body;
    for (const auto& f : t.factors) body += (body.empty() ? "" : " ") + factor_string(f);
    if (body.empty()) {
      out += scalar_factor_string(t.coeff);
    } else if (t.coeff == RadicalScalar(1L)) {
      out += body;
    } else if (t.coeff == RadicalScalar(-1L)) {
      out += "-" + body;
    } else {
      out += scalar_factor_string(t.coeff) + " " + body;
    }
  }
  return out;
}

std::optional<CuntzPolynomial> to_cuntz_polynomial(const OperatorExpression& expr) {
  CuntzPolynomial out;
  for (const auto& t : expr.terms) {
    CuntzPolynomial p = CuntzPolynomial::identity();
    p *= t.coeff;
    for (const auto& f : t.factors) {
      if (f.kind != OperatorFactor::Kind::S) return std::nullopt;
      p = p * CuntzPolynomial::generator(f.index, f.star);
    }
    out += p;
  }
  return out;
}

std::optional<BosonPolynomial> to_boson_polynomial(const OperatorExpression& expr) {
  BosonPolynomial out;
  for (const auto& t : expr.terms) {
    std::vector<BosonFactor> factors;
    for (const auto& f : t.factors) {
      if (f.kind != OperatorFactor::Kind::A) return std::nullopt;
      factors.push_back({f.index, f.star});
    }
    out += normal_order(factors, t.coeff);
  }
  return out;
}

Ket apply_expression(const OperatorExpression& expr, const RepSpec& spec, const Ket& v) {
  std::optional<EmbeddedAction> embedded;
  if (spec.alphabet().is_finite()) embedded.emplace(EmbeddingSpec(*spec.alphabet().bound), spec);
  Ket out;
  for (const auto& t : expr.terms) {
    Ket w = v;
    for (auto it = t.factors.rbegin(); it != t.factors.rend() && !w.is_zero(); ++it) {
      if (it->kind == OperatorFactor::Kind::S) {
        w = apply_generator(spec, it->index, it->star, w);
      } else if (embedded) {
        w = literal_boson(*embedded, it->index, it->star, w);
      } else {
        w = it->star ? apply_create(it->index, w) : apply_annihilate(it->index, w);
      }
    }
    out += t.coeff * w;
  }
  return out;
}

OdometerKet apply_expression(const OperatorExpression& expr, const OdometerKet& v) {
  const OdometerAction action;
  OdometerKet out;
  for (const auto& t : expr.terms) {
    OdometerKet w = v;
    for (auto it = t.factors.rbegin(); it != t.factors.rend() && !w.is_zero(); ++it) {
      w = it->kind == OperatorFactor::Kind::S ? apply_odometer(it->index, it->star, w)
                                              : literal_boson(action, it->index, it->star, w);
    }
    out += t.coeff * w;
  }
  return out;
}

}  // namespace rbs
