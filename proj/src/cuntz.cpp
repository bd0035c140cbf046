#include "rbs/cuntz.h"

#include <algorithm>

#include "rbs/errors.h"

namespace rbs {

namespace {

bool is_prefix_of(const Word& head, const Word& word) {
  return head.size() <= word.size() && std::equal(head.begin(), head.end(), word.begin());
}

Word concat(const Word& a, Word::const_iterator from, Word::const_iterator to) {
  Word out = a;
  out.insert(out.end(), from, to);
  return out;
}

std::string coefficient_prefix(const RadicalScalar& c) {
  if (c == RadicalScalar(1L)) return "";
  if (c.terms().size() == 1) return c.to_string() + " ";
  return "(" + c.to_string() + ") ";
}

}  // namespace

RepSpec::RepSpec(Alphabet alphabet, Word cycle) : alphabet_(alphabet), cycle_(std::move(cycle)) {
  if (alphabet_.bound && *alphabet_.bound < 2) throw DomainError("O_N needs N >= 2");
  if (!is_primitive(cycle_)) throw DomainError("representation cycle must be nonempty and primitive");
  if (!alphabet_.contains(cycle_)) {
    throw DomainError("cycle letter outside the alphabet X_" + alphabet_.to_string());
  }
}

bool RepSpec::contains(const EPWord& label) const {
  if (!alphabet_.contains(label.prefix())) return false;
  const auto rots = rotations(cycle_);
  return std::find(rots.begin(), rots.end(), label.cycle()) != rots.end();
}

std::string RepSpec::to_string() const {
  std::string out = "|" + word_to_string(cycle_);
  if (alphabet_.is_finite()) out += " (N=" + alphabet_.to_string() + ")";
  return out;
}

CuntzPolynomial::CuntzPolynomial(const CuntzMonomial& m) { add(m); }

CuntzPolynomial CuntzPolynomial::generator(Letter i, bool star) {
  CuntzMonomial m;
  (star ? m.right : m.left).push_back(i);
  return CuntzPolynomial(m);
}

std::vector<CuntzMonomial> CuntzPolynomial::monomials() const {
  std::vector<CuntzMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

void CuntzPolynomial::add(const CuntzMonomial& m) {
  if (m.coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m.left, m.right}, m.coeff);
  if (inserted) return;
  it->second += m.coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

CuntzPolynomial& CuntzPolynomial::operator+=(const CuntzPolynomial& other) {
  for (const auto& m : other.monomials()) add(m);
  return *this;
}

CuntzPolynomial& CuntzPolynomial::operator*=(const RadicalScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= c;
  return *this;
}

CuntzPolynomial operator*(const CuntzPolynomial& a, const CuntzPolynomial& b) {
  CuntzPolynomial out;
  for (const auto& ma : a.monomials()) {
    for (const auto& mb : b.monomials()) out += monomial_multiply(ma, mb);
  }
  return out;
}

std::string CuntzPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (Letter l : key.first) factors += (factors.empty() ? "s" : " s") + std::to_string(l);
    for (auto it = key.second.rbegin(); it != key.second.rend(); ++it) {
      factors += (factors.empty() ? "s" : " s") + std::to_string(*it) + "*";
    }
    if (factors.empty()) {
      out += c.terms().size() == 1 ? c.to_string() : "(" + c.to_string() + ")";
    } else {
      out += coefficient_prefix(c) + factors;
    }
  }
  return out;
}

CuntzPolynomial monomial_multiply(const CuntzMonomial& a, const CuntzMonomial& b) {
  const RadicalScalar coeff = a.coeff * b.coeff;
  if (coeff.is_zero()) return {};
  // s_K^* s_L collapses along the common prefix of K and L.
  if (is_prefix_of(a.right, b.left)) {
    Word left = concat(a.left, b.left.begin() + static_cast<std::ptrdiff_t>(a.right.size()), b.left.end());
    return CuntzPolynomial(CuntzMonomial{coeff, std::move(left), b.right});
  }
  if (is_prefix_of(b.left, a.right)) {
    Word right = concat(b.right, a.right.begin() + static_cast<std::ptrdiff_t>(b.left.size()), a.right.end());
    return CuntzPolynomial(CuntzMonomial{coeff, a.left, std::move(right)});
  }
  return {};
}

CuntzPolynomial adjoint(const CuntzPolynomial& p) {
  CuntzPolynomial out;
  for (const auto& m : p.monomials()) out.add({m.coeff, m.right, m.left});
  return out;
}

Ket apply_generator(const RepSpec& spec, Letter i, bool star, const Ket& v) {
  if (!spec.alphabet().contains(i)) {
    throw DomainError("generator s" + std::to_string(i) + " outside the alphabet X_" + spec.alphabet().to_string());
  }
  Ket out;
  for (const auto& [label, c] : v) {
    if (!star) {
      out.add(label.prepend(i), c);
    } else if (label.letter_at(1) == i) {
      out.add(label.drop_first(), c);
    }
  }
  return out;
}

Ket apply_polynomial(const RepSpec& spec, const CuntzPolynomial& p, const Ket& v) {
  Ket out;
  for (const auto& m : p.monomials()) {
    // s_K^* = s_{k_m}^* ... s_{k_1}^*: strip k_1 first.
    Ket w = v;
    for (auto it = m.right.begin(); it != m.right.end() && !w.is_zero(); ++it) {
      w = apply_generator(spec, *it, true, w);
    }
    for (auto it = m.left.rbegin(); it != m.left.rend() && !w.is_zero(); ++it) {
      w = apply_generator(spec, *it, false, w);
    }
    out += m.coeff * w;
  }
  return out;
}

Ket gp_vector(const RepSpec& spec) { return Ket(EPWord(spec.cycle())); }

Report check_isometry_relations(const RepSpec& spec, Letter k, std::span<const Ket> sample) {
  if (k == 0) throw DomainError("alphabet cutoff must be >= 1");
  if (spec.alphabet().bound) k = std::min(k, *spec.alphabet().bound);
  Report report("isometry relations on " + spec.to_string());
  Tally isometry("s_i* s_j = delta_ij I, i,j <= " + std::to_string(k));
  Tally idempotent("P = sum_{i<=k} s_i s_i* is idempotent");
  Tally orthogonal("<P v, v - P v> = 0");
  Tally bounded("|P v|^2 <= |v|^2");
  Tally complete("sum_{i<=N} s_i s_i* = I");
  for (std::size_t idx = 0; idx < sample.size(); ++idx) {
    const Ket& v = sample[idx];
    const std::string where = "sample " + std::to_string(idx);
    for (Letter j = 1; j <= k; ++j) {
      const Ket sj = apply_generator(spec, j, false, v);
      for (Letter i = 1; i <= k; ++i) {
        const Ket lhs = apply_generator(spec, i, true, sj);
        const bool ok = (i == j) ? lhs == v : lhs.is_zero();
        isometry.record(ok, where + ", i=" + std::to_string(i) + ", j=" + std::to_string(j));
      }
    }
    auto project = [&](const Ket& w) {
      Ket out;
      for (Letter i = 1; i <= k; ++i) out += apply_generator(spec, i, false, apply_generator(spec, i, true, w));
      return out;
    };
    const Ket pv = project(v);
    idempotent.record(project(pv) == pv, where);
    const RadicalScalar cross = inner(pv, v - pv);
    orthogonal.record(cross.is_zero(), where + ": " + cross.to_string());
    const double lhs = norm_squared(pv).to_double();
    const double rhs = norm_squared(v).to_double();
    bounded.record(lhs <= rhs + 1e-9, where);
    if (spec.alphabet().bound && k == *spec.alphabet().bound) complete.record(pv == v, where);
  }
  isometry.commit(report);
  idempotent.commit(report);
  orthogonal.commit(report);
  bounded.commit(report);
  if (spec.alphabet().bound && k == *spec.alphabet().bound) complete.commit(report);
  return report;
}

}  // namespace rbs
