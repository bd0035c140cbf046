#include "rbs/serialize.h"

namespace rbs {

std::string scalar_factor_string(const RadicalScalar& c) {
  if (c.terms().size() > 1) return "(" + c.to_string() + ")";
  return c.to_string();
}

std::string to_string(const Ket& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [label, c] : v) {
    if (!out.empty()) out += '\n';
    out += scalar_factor_string(c) + " * |" + label.to_string() + ">";
  }
  return out;
}

namespace {

nlohmann::json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

nlohmann::json scalar_to_json(const RadicalScalar& c) {
  auto out = nlohmann::json::array();
  for (const auto& [r, q] : c.terms()) {
    out.push_back({{"radicand", r}, {"numerator", integer_to_json(q.get_num())},
                   {"denominator", integer_to_json(q.get_den())}});
  }
  return out;
}

nlohmann::json ket_to_json(const Ket& v) {
  auto out = nlohmann::json::array();
  for (const auto& [label, c] : v) {
    out.push_back({{"prefix", label.prefix()}, {"cycle", label.cycle()}, {"coeff", scalar_to_json(c)}});
  }
  return out;
}

nlohmann::json ket_to_json(const OdometerKet& v) {
  auto out = nlohmann::json::array();
  for (const auto& [label, c] : v) out.push_back({{"index", label.index}, {"coeff", scalar_to_json(c)}});
  return out;
}

nlohmann::json report_to_json(const Report& report) {
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks()) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"title", report.title()},
          {"passed", report.all_passed()},
          {"passed_count", report.passed_count()},
          {"failed_count", report.failed_count()},
          {"checks", checks}};
}

nlohmann::json components_to_json(const std::vector<ComponentReport>& components) {
  auto out = nlohmann::json::array();
  for (const auto& c : components) {
    auto identities = nlohmann::json::array();
    for (const auto& id : c.verified) {
      identities.push_back({{"identity", id.identity},
                            {"scalar", id.scalar.to_string()},
                            {"value", scalar_to_json(id.scalar)},
                            {"passed", id.passed}});
    }
    out.push_back({{"vacuum", c.vacuum.to_string()},
                   {"pattern", c.pattern},
                   {"classification", c.classification.to_string()},
                   {"identities", identities}});
  }
  return out;
}

}  // namespace rbs
