#pragma once

#include <vector>

#include <json.hpp>

#include "rbs/branching.h"
#include "rbs/embed.h"
#include "rbs/ket.h"
#include "rbs/report.h"

namespace rbs {

/// [{radicand, numerator, denominator}], one entry per radicand. Numerators
/// and denominators that do not fit in 64 bits are written as decimal strings.
nlohmann::json scalar_to_json(const RadicalScalar& c);
/// [{prefix, cycle, coeff}] in label order.
nlohmann::json ket_to_json(const Ket& v);
/// [{index, coeff}] in index order.
nlohmann::json ket_to_json(const OdometerKet& v);
nlohmann::json report_to_json(const Report& report);
/// [{vacuum, pattern, classification, identities: [{identity, scalar, value, passed}]}]
nlohmann::json components_to_json(const std::vector<ComponentReport>& components);

}  // namespace rbs
