#include "rbs/boson.h"

#include <algorithm>
#include <charconv>
#include <deque>

#include "rbs/errors.h"
#include "rbs/literal.h"

namespace rbs {

std::vector<BosonFactor> BosonMonomial::factors() const {
  std::vector<BosonFactor> out;
  for (const auto& [mode, k] : creators) out.insert(out.end(), k, BosonFactor{mode, true});
  for (const auto& [mode, l] : annihilators) out.insert(out.end(), l, BosonFactor{mode, false});
  return out;
}

std::uint32_t BosonMonomial::degree() const {
  std::uint32_t out = 0;
  for (const auto& [mode, k] : creators) out += k;
  for (const auto& [mode, l] : annihilators) out += l;
  return out;
}

BosonPolynomial::BosonPolynomial(const BosonMonomial& m) { add(m); }

std::vector<BosonMonomial> BosonPolynomial::monomials() const {
  std::vector<BosonMonomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

void BosonPolynomial::add(const BosonMonomial& m) {
  if (m.coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({m.creators, m.annihilators}, m.coeff);
  if (inserted) return;
  it->second += m.coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

BosonPolynomial& BosonPolynomial::operator+=(const BosonPolynomial& other) {
  for (const auto& m : other.monomials()) add(m);
  return *this;
}

BosonPolynomial& BosonPolynomial::operator-=(const BosonPolynomial& other) {
  for (auto m : other.monomials()) {
    m.coeff = -m.coeff;
    add(m);
  }
  return *this;
}

BosonPolynomial operator*(const BosonPolynomial& a, const BosonPolynomial& b) {
  BosonPolynomial out;
  for (const auto& ma : a.monomials()) {
    for (const auto& mb : b.monomials()) {
      std::vector<BosonFactor> product = ma.factors();
      const auto tail = mb.factors();
      product.insert(product.end(), tail.begin(), tail.end());
      out += normal_order(product, ma.coeff * mb.coeff);
    }
  }
  return out;
}

std::string BosonPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  auto ordered = monomials();
  // highest degree first; map order within a degree
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const BosonMonomial& a, const BosonMonomial& b) { return a.degree() > b.degree(); });
  std::string out;
  for (auto m : ordered) {
    if (!out.empty()) {
      const bool negative = m.coeff.terms().size() == 1 && m.coeff.terms().begin()->second < 0;
      out += negative ? " - " : " + ";
      if (negative) m.coeff = -m.coeff;
    }
    std::string factors;
    for (const auto& f : m.factors()) {
      if (!factors.empty()) factors += ' ';
      factors += "a" + std::to_string(f.mode) + (f.create ? "*" : "");
    }
    const std::string coeff = m.coeff.terms().size() == 1 ? m.coeff.to_string() : "(" + m.coeff.to_string() + ")";
    if (factors.empty()) {
      out += coeff;
    } else if (m.coeff == RadicalScalar(1L)) {
      out += factors;
    } else if (m.coeff == RadicalScalar(-1L)) {
      out += "-" + factors;
    } else {
      out += coeff + " " + factors;
    }
  }
  return out;
}

Ket apply_annihilate(Mode n, const Ket& v) {
  if (n == 0) throw DomainError("boson modes are 1-based");
  Ket out;
  for (const auto& [label, c] : v) {
    const Letter letter = label.letter_at(n);
    if (letter < 2) continue;
    out.add(label.set_letter(n, letter - 1), sqrt_nat(letter - 1) * c);
  }
  return out;
}

Ket apply_create(Mode n, const Ket& v) {
  if (n == 0) throw DomainError("boson modes are 1-based");
  Ket out;
  for (const auto& [label, c] : v) {
    const Letter letter = label.letter_at(n);
    out.add(label.set_letter(n, letter + 1), sqrt_nat(letter) * c);
  }
  return out;
}

Ket apply_boson_factor(const BosonFactor& f, const Ket& v) {
  return f.create ? apply_create(f.mode, v) : apply_annihilate(f.mode, v);
}

Ket apply_boson_product(std::span<const BosonFactor> factors, const Ket& v) {
  Ket w = v;
  for (auto it = factors.rbegin(); it != factors.rend() && !w.is_zero(); ++it) w = apply_boson_factor(*it, w);
  return w;
}

Ket apply_boson(const BosonMonomial& m, const Ket& v) {
  const auto factors = m.factors();
  return m.coeff * apply_boson_product(factors, v);
}

Ket apply_boson(const BosonPolynomial& p, const Ket& v) {
  Ket out;
  for (const auto& m : p.monomials()) out += apply_boson(m, v);
  return out;
}

BosonPolynomial normal_order(std::span<const BosonFactor> product, const RadicalScalar& coeff) {
  BosonPolynomial out;
  if (coeff.is_zero()) return out;
  struct Pending {
    RadicalScalar coeff;
    std::vector<BosonFactor> factors;
  };
  std::deque<Pending> work;
  work.push_back({coeff, std::vector<BosonFactor>(product.begin(), product.end())});
  while (!work.empty()) {
    Pending term = std::move(work.front());
    work.pop_front();
    auto& fs = term.factors;
    auto it = std::adjacent_find(fs.begin(), fs.end(),
                                 [](const BosonFactor& a, const BosonFactor& b) { return !a.create && b.create; });
    if (it == fs.end()) {
      BosonMonomial m;
      m.coeff = term.coeff;
      for (const auto& f : fs) ++(f.create ? m.creators : m.annihilators)[f.mode];
      out.add(m);
      continue;
    }
    const auto index = static_cast<std::size_t>(it - fs.begin());
    if (fs[index].mode == fs[index + 1].mode) {
      std::vector<BosonFactor> contracted;
      contracted.reserve(fs.size() - 2);
      contracted.insert(contracted.end(), fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(index));
      contracted.insert(contracted.end(), fs.begin() + static_cast<std::ptrdiff_t>(index + 2), fs.end());
      work.push_back({term.coeff, std::move(contracted)});
    }
    std::swap(fs[index], fs[index + 1]);
    work.push_back(std::move(term));
  }
  return out;
}

BosonMonomial creator_monomial(const Occupations& occupations) {
  BosonMonomial m;
  for (const auto& [mode, count] : occupations) {
    if (mode == 0) throw DomainError("boson modes are 1-based");
    if (count > 0) m.creators[mode] = count;
  }
  return m;
}

FockWord fock_word(const Occupations& occupations) {
  FockWord out;
  Mode top = 0;
  for (const auto& [mode, count] : occupations) {
    if (mode == 0) throw DomainError("boson modes are 1-based");
    if (count > 0) top = std::max(top, mode);
  }
  out.word.assign(top, 1);
  for (const auto& [mode, count] : occupations) {
    if (count == 0) continue;
    out.word[mode - 1] = count + 1;
    out.coefficient *= sqrt_factorial(count);
  }
  return out;
}

BosonPolynomial fock_extension_action(Letter m, bool star, const Occupations& state) {
  if (m == 0) throw DomainError("generator indices are 1-based");
  const BosonMonomial input = creator_monomial(state);
  BosonMonomial out;
  if (!star) {
    // s_m X Omega = ((m-1)!)^{-1/2} (a_1^*)^{m-1} rho(X) Omega
    out.coeff = sqrt_factorial(m - 1).inverse();
    if (m > 1) out.creators[1] = m - 1;
    for (const auto& [mode, k] : input.creators) out.creators[mode + 1] = k;
    return BosonPolynomial(out);
  }
  if (input.creators.empty() || input.creators.begin()->first >= 2) {
    if (m != 1) return {};
    for (const auto& [mode, k] : input.creators) out.creators[mode - 1] = k;
    return BosonPolynomial(out);
  }
  const std::uint32_t k1 = input.creators.begin()->second;
  if (m != k1 + 1) return {};
  out.coeff = sqrt_factorial(k1);
  for (auto it = std::next(input.creators.begin()); it != input.creators.end(); ++it) {
    out.creators[it->first - 1] = it->second;
  }
  return BosonPolynomial(out);
}

namespace {

std::string mode_pair(Mode n, Mode m) { return "n=" + std::to_string(n) + ", m=" + std::to_string(m); }

}  // namespace

Report check_ccr(std::span<const Ket> samples, Mode max_mode) {
  Report report("canonical commutation relations");
  Tally mixed("a_n a_m* - a_m* a_n = delta_nm I");
  Tally lowering("a_n a_m - a_m a_n = 0");
  Tally raising("a_n* a_m* - a_m* a_n* = 0");
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const Ket& v = samples[idx];
    const std::string where = "sample " + std::to_string(idx) + ", ";
    for (Mode n = 1; n <= max_mode; ++n) {
      for (Mode m = 1; m <= max_mode; ++m) {
        const Ket c1 = apply_annihilate(n, apply_create(m, v)) - apply_create(m, apply_annihilate(n, v));
        mixed.record(n == m ? c1 == v : c1.is_zero(), where + mode_pair(n, m));
        const Ket c2 = apply_annihilate(n, apply_annihilate(m, v)) - apply_annihilate(m, apply_annihilate(n, v));
        lowering.record(c2.is_zero(), where + mode_pair(n, m));
        const Ket c3 = apply_create(n, apply_create(m, v)) - apply_create(m, apply_create(n, v));
        raising.record(c3.is_zero(), where + mode_pair(n, m));
      }
    }
  }
  mixed.commit(report);
  lowering.commit(report);
  raising.commit(report);
  return report;
}

Report check_literal_agreement(const RepSpec& spec, std::span<const Ket> samples, Mode max_mode) {
  Report report("closed form against the defining sums on " + spec.to_string());
  const WordAction action(spec);
  Tally lower("a_n closed form = truncated sum");
  Tally raise("a_n* closed form = truncated sum");
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    for (Mode n = 1; n <= max_mode; ++n) {
      const std::string where = "sample " + std::to_string(idx) + ", n=" + std::to_string(n);
      lower.record(apply_annihilate(n, samples[idx]) == literal_boson(action, n, false, samples[idx]), where);
      raise.record(apply_create(n, samples[idx]) == literal_boson(action, n, true, samples[idx]), where);
    }
  }
  lower.commit(report);
  raise.commit(report);
  return report;
}

Report check_boson_adjointness(std::span<const Ket> samples, Mode max_mode) {
  Report report("boson adjointness");
  Tally tally("<a_n u, v> = <u, a_n* v>");
  for (std::size_t idx = 0; idx + 1 < samples.size(); ++idx) {
    const Ket& u = samples[idx];
    const Ket& v = samples[idx + 1];
    for (Mode n = 1; n <= max_mode; ++n) {
      const RadicalScalar lhs = inner(apply_annihilate(n, u), v);
      const RadicalScalar rhs = inner(u, apply_create(n, v));
      tally.record(lhs == rhs, "pair " + std::to_string(idx) + ", n=" + std::to_string(n) + ": " + lhs.to_string() +
                                   " vs " + rhs.to_string());
    }
  }
  tally.commit(report);
  return report;
}

Report check_intertwining(const RepSpec& spec, std::span<const Ket> samples, Mode max_mode, Letter max_generator) {
  Report report("intertwining relations on " + spec.to_string());
  Tally lower("s_m a_n = a_{n+1} s_m");
  Tally raise("s_m a_n* = a_{n+1}* s_m");
  Tally rho("rho(x) s_i = s_i x");
  auto rho_apply = [&](const BosonFactor& x, const Ket& w) {
    Letter bound = 0;
    for (const auto& [label, c] : w) bound = std::max(bound, label.max_letter());
    Ket out;
    for (Letter k = 1; k <= bound + 1; ++k) {
      const Ket stripped = apply_generator(spec, k, true, w);
      if (!stripped.is_zero()) out += apply_generator(spec, k, false, apply_boson_factor(x, stripped));
    }
    return out;
  };
  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const Ket& v = samples[idx];
    for (Letter m = 1; m <= max_generator; ++m) {
      const Ket sv = apply_generator(spec, m, false, v);
      for (Mode n = 1; n <= max_mode; ++n) {
        const std::string where = "sample " + std::to_string(idx) + ", m=" + std::to_string(m) + ", n=" +
                                  std::to_string(n);
        lower.record(apply_generator(spec, m, false, apply_annihilate(n, v)) == apply_annihilate(n + 1, sv), where);
        raise.record(apply_generator(spec, m, false, apply_create(n, v)) == apply_create(n + 1, sv), where);
        for (bool create : {false, true}) {
          const BosonFactor x{n, create};
          rho.record(rho_apply(x, sv) == apply_generator(spec, m, false, apply_boson_factor(x, v)), where);
        }
      }
    }
  }
  lower.commit(report);
  raise.commit(report);
  rho.commit(report);
  return report;
}

namespace {

void enumerate_states(Mode max_mode, std::size_t max_occupied, std::uint32_t max_exponent, Mode next,
                      Occupations& current, std::vector<Occupations>& out) {
  out.push_back(current);
  if (current.size() == max_occupied) return;
  for (Mode mode = next; mode <= max_mode; ++mode) {
    for (std::uint32_t k = 1; k <= max_exponent; ++k) {
      current[mode] = k;
      enumerate_states(max_mode, max_occupied, max_exponent, mode + 1, current, out);
      current.erase(mode);
    }
  }
}

}  // namespace

Report check_fock_extension(Letter max_generator, std::size_t max_modes_occupied, std::uint32_t max_exponent,
                            Mode max_mode) {
  Report report("O_inf action on Fock states");
  const RepSpec fock = RepSpec::infinite({1});
  const Ket omega = gp_vector(fock);
  std::vector<Occupations> states;
  Occupations scratch;
  enumerate_states(max_mode, max_modes_occupied, max_exponent, 1, scratch, states);

  Tally on_vacuum("s_m Omega = ((m-1)!)^{-1/2} (a_1*)^{m-1} Omega");
  Tally on_state("s_m X Omega = ((m-1)!)^{-1/2} (a_1*)^{m-1} rho(X) Omega");
  Tally star_vacuum("s_m* Omega = delta_{m,1} Omega");
  Tally star_shift("s_m* X Omega, n_1 >= 2");
  Tally star_strip("s_m* X Omega, n_1 = 1");
  for (const auto& state : states) {
    const Ket x_omega = apply_boson(creator_monomial(state), omega);
    for (Letter m = 1; m <= max_generator; ++m) {
      for (bool star : {false, true}) {
        const Ket lhs = apply_generator(fock, m, star, x_omega);
        const Ket rhs = apply_boson(fock_extension_action(m, star, state), omega);
        const std::string where = "s" + std::to_string(m) + (star ? "*" : "") + " on [" +
                                  occupations_to_string(state) + "]";
        Tally& tally = !star ? (state.empty() ? on_vacuum : on_state)
                             : (state.empty() ? star_vacuum : (state.begin()->first >= 2 ? star_shift : star_strip));
        tally.record(lhs == rhs, where);
      }
    }
  }
  for (const Tally* t : {&on_vacuum, &on_state, &star_vacuum, &star_shift, &star_strip}) t->commit(report);
  return report;
}

Report check_fock_dictionary(std::span<const Occupations> samples) {
  Report report("Fock state / word dictionary in P_inf(1)");
  const Ket omega = gp_vector(RepSpec::infinite({1}));
  Tally tally("prod (a_n*)^{k_n} Omega = prod sqrt(k_n!) s_J Omega");
  for (const auto& occ : samples) {
    const Ket lhs = apply_boson(creator_monomial(occ), omega);
    const FockWord fw = fock_word(occ);
    const Ket rhs = fw.coefficient * Ket(EPWord(fw.word, {1}));
    tally.record(lhs == rhs, "[" + occupations_to_string(occ) + "]");
  }
  tally.commit(report);
  return report;
}

std::string occupations_to_string(const Occupations& occupations) {
  std::string out;
  for (const auto& [mode, count] : occupations) {
    if (count == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(mode) + ":" + std::to_string(count);
  }
  return out;
}

Occupations parse_occupations(std::string_view text) {
  Occupations out;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&](const char* what) {
    skip_spaces();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError(std::string("expected ") + what, pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_spaces();
    return value;
  };
  skip_spaces();
  if (pos == text.size()) return out;
  while (true) {
    const std::size_t at = pos;
    const Mode mode = number("a mode");
    if (mode == 0) throw ParseError("modes are 1-based", at);
    if (pos == text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
    ++pos;
    const std::uint32_t count = number("an occupation count");
    if (out.count(mode) != 0) throw ParseError("mode listed twice", at);
    if (count > 0) out[mode] = count;
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return out;
}

}  // namespace rbs
