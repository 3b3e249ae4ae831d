#pragma once

#include <iosfwd>
#include <string>

namespace sslab {

struct CliOptions {
  std::string command;
  std::string model_path;
  std::string json_path;        // empty: no JSON report
  std::string divisor = "hbar"; // divisor symbol for the quantize command
  bool eps_symbolic = true;     // keep delta^(k)(1/eps) tokens symbolic
};

/// Executes one CLI command against a model file. Returns the process exit
/// code: 0 if every verdict passes, 1 on any mismatch verdict, 2 on input
/// errors.
int run_cli(const CliOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace sslab
