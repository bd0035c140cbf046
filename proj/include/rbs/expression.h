#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbs/boson.h"
#include "rbs/cuntz.h"
#include "rbs/embed.h"
#include "rbs/ket.h"

namespace rbs {

struct OperatorFactor {
  enum class Kind { S, A };
  Kind kind = Kind::S;
  std::uint32_t index = 1;
  bool star = false;

  friend bool operator==(const OperatorFactor&, const OperatorFactor&) = default;
};

struct OperatorTerm {
  RadicalScalar coeff{1L};
  /// Leftmost factor first; the rightmost acts first.
  std::vector<OperatorFactor> factors;
};

/// Sum of products of s_k, s_k^*, a_k, a_k^* with exact coefficients, fully
/// expanded (no parentheses left). Terms are kept in input order.
struct OperatorExpression {
  std::vector<OperatorTerm> terms;

  std::string to_string() const;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := '-'? factor+                       juxtaposition is the product
///   factor := s<k> '*'? | a<k> '*'? | number | number '/' number
///           | 'sqrt(' number ')' | '(' expr ')' | factor '*' factor
/// A `*` written directly after s<k> or a<k> is the adjoint; elsewhere it
/// multiplies. Throws ParseError with the offending position.
OperatorExpression parse_expression(std::string_view text);

/// The expression as an element of O_inf when it has no boson factors.
std::optional<CuntzPolynomial> to_cuntz_polynomial(const OperatorExpression& expr);
/// The normal-ordered expression when it has no Cuntz factors.
std::optional<BosonPolynomial> to_boson_polynomial(const OperatorExpression& expr);

/// Acts in the word model `spec`. For the infinite alphabet a_n uses the
/// closed-form label rule; for a finite alphabet s_k is the O_N generator and
/// a_n goes through the embedding of O_inf into O_N.
Ket apply_expression(const OperatorExpression& expr, const RepSpec& spec, const Ket& v);
/// Acts in the odometer model of P_inf(1).
OdometerKet apply_expression(const OperatorExpression& expr, const OdometerKet& v);

}  // namespace rbs
