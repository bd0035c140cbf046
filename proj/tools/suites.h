#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbs/boson.h"
#include "rbs/report.h"

namespace rbs::cli {

struct SuiteOptions {
  std::optional<Mode> modes;
  std::optional<std::uint32_t> exponents;
  std::uint32_t cutoff = 4;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  std::optional<Letter> N;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Runs one named suite; every check lands in the returned reports.
std::vector<Report> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace rbs::cli
