#pragma once

#include <string>
#include <vector>

namespace altcert {

struct CliResult {
  int exit_code = 0;  // 0 pass, 1 certified fail, 2 input or usage error
  std::string out;    // JSON report (or PD text for export-pd)
  std::string err;    // human summary
};

/// Runs one command; args exclude the program name. Never throws.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace altcert
