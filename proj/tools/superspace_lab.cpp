#include <CLI11.hpp>
#include <iostream>

#include "sslab/cli_runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"superspace-lab: superspace calculus verification engine"};
  sslab::CliOptions opt;
  app.add_option("command", opt.command,
                 "expand|reduce|quantize|bigaction|dimcheck|lattice|"
                 "identities|all")
      ->required();
  app.add_option("model", opt.model_path, "model file")->required();
  app.add_option("--json", opt.json_path, "write a JSON report to this path");
  app.add_option("--divisor", opt.divisor,
                 "divisor symbol for the quantize command (hbar or B)")
      ->check(CLI::IsMember({"hbar", "B"}));
  app.add_flag("--eps-symbolic", opt.eps_symbolic,
               "keep eps and delta^(k)(1/eps) tokens symbolic (default)");
  CLI11_PARSE(app, argc, argv);
  return sslab::run_cli(opt, std::cout, std::cerr);
}
