#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace grpd::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

// Runs `grpd` with args (program name excluded). Returns 0 when every check
// passes, 1 on a validation failure and 2 on an input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
  nlohmann::json report;
  int exit_code = 0;
};

// Runs the invariant checks for every fixture file in `dir`.
SuiteResult run_suite(const std::filesystem::path& dir, std::uint64_t seed, bool timing);

}  // namespace grpd::cli
