// cli.hpp -- config-driven run front end: task dispatch, sweeps, exit codes.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "decobound/io.hpp"

namespace decobound::cli {

// Process exit codes (also returned by run()).
inline constexpr int exit_ok = 0;
inline constexpr int exit_schema = 2;     // config/schema violation
inline constexpr int exit_numerical = 3;  // quadrature/propagation failure
inline constexpr int exit_invariant = 4;  // structural invariant violation

struct SweepAxis {
  std::string name;  // lambda | beta | kappa | omega_c | detuning
  std::vector<double> values;
};

struct RunConfig {
  std::string task;  // spectrum | kernels | generator | evolve | discrete | oracle | sweep
  io::BathSpec bath = bath::OhmicBath{};
  QubitParams qubits;
  std::vector<double> t_grid;
  std::vector<double> omega_grid;
  std::vector<double> lambda_grid;
  std::string initial_state = "01";  // 01 | 00 | singlet | triplet | bell_phi_plus
  std::vector<SweepAxis> sweep_axes;
  // oracle task extras
  int fock_dim = 0;        // 0 = choose from beta automatically
  double oracle_time = 5.0;
  // kernels task extras
  Sign kernel_s = Sign::plus;
  Sign kernel_s2 = Sign::minus;
};

RunConfig config_from_json(const io::json& j);  // throws std::invalid_argument on schema errors
io::json config_to_json(const RunConfig& cfg);

struct RunOptions {
  std::filesystem::path out_dir = ".";
  int workers = 0;  // 0 = DECOBOUND_WORKERS env var, else hardware default
  bool reproducible = false;
};

// Executes the configured task, writing its artifact into out_dir.  Returns an
// exit code; on failure writes a machine-readable error JSON to err_stream and
// leaves no partial artifact behind.
int run(const RunConfig& cfg, const RunOptions& opt, std::ostream& err_stream);

// Loads the config file, then run().  Schema errors (unreadable file, bad
// JSON, bad fields) exit with exit_schema.
int run_file(const std::filesystem::path& config_path, const RunOptions& opt,
             std::ostream& err_stream);

int resolve_workers(int requested);

}  // namespace decobound::cli
