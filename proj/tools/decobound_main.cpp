#include <CLI11.hpp>
#include <iostream>

#include "decobound/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"two-qubit bath-mediated gate and decoherence calculator"};
  std::string config_path;
  decobound::cli::RunOptions opt;
  std::string out_dir = ".";
  app.add_option("-c,--config", config_path, "run configuration JSON")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("-o,--out", out_dir, "output directory for artifacts");
  app.add_option("-j,--workers", opt.workers,
                 "worker threads for sweeps (0 = auto)");
  app.add_flag("--reproducible", opt.reproducible,
               "omit timestamps so identical configs give identical files");
  CLI11_PARSE(app, argc, argv);

  opt.out_dir = out_dir;
  return decobound::cli::run_file(config_path, opt, std::cerr);
}
