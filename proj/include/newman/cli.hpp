#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>

#include "newman/digitsums.hpp"
#include "newman/report.hpp"
#include "newman/scanner.hpp"

namespace newman {

enum ExitCode : int {
  kExitPass = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitPrecision = 3,
};

struct CliConfig {
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
  std::uint64_t scan_budget = kDefaultScanBudget;
  unsigned float_precision_digits = 0;  // 0 = automatic per evaluation
  std::string ledger_path;              // empty = no ledger
  OutputFormat output_format = OutputFormat::human;

  void validate() const;
};

using EnvLookup = std::function<const char*(const char*)>;

// NEWMAN_ENUMERATION_BUDGET, NEWMAN_SCAN_BUDGET, NEWMAN_PRECISION,
// NEWMAN_LEDGER, NEWMAN_FORMAT. Unset variables keep the defaults.
CliConfig config_from_environment(const EnvLookup& env);

// args excludes the program name. Returns one of ExitCode.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err,
                const EnvLookup& env = [](const char* name) -> const char* { return std::getenv(name); });

}  // namespace newman
