#include "decobound/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "decobound/discrete.hpp"
#include "decobound/dynamics.hpp"
#include "decobound/generator.hpp"
#include "decobound/kernels.hpp"
#include "decobound/oracle.hpp"

namespace decobound::cli {

namespace {

namespace fs = std::filesystem;
using io::json;

const char* task_names[] = {"spectrum", "kernels",  "generator", "evolve",
                            "discrete", "oracle",   "sweep"};

std::vector<double> grid_from_json(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const auto& v : j) out.push_back(v.get<double>());
  } else if (j.is_object() && j.contains("from") && j.contains("to") &&
             j.contains("points")) {
    const double a = j.at("from").get<double>(), b = j.at("to").get<double>();
    const int n = j.at("points").get<int>();
    if (n < 1) throw std::invalid_argument(key + ": points must be >= 1");
    for (int i = 0; i < n; ++i)
      out.push_back(n == 1 ? a : a + (b - a) * i / double(n - 1));
  } else {
    throw std::invalid_argument(key + " must be an array or {from,to,points}");
  }
  return out;
}

json grid_to_json(const std::vector<double>& g) {
  json out = json::array();
  for (double v : g) out.push_back(v);
  return out;
}

Sign sign_from_char(char c) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  throw std::invalid_argument("kernel_signs must use only '+' and '-'");
}

void require_sorted(const std::vector<double>& g, const std::string& name) {
  if (g.empty()) throw std::invalid_argument(name + " must be non-empty");
  if (!std::is_sorted(g.begin(), g.end()))
    throw std::invalid_argument(name + " must be sorted ascending");
}

Eigen::Matrix4cd initial_density(const std::string& name) {
  Eigen::Vector4cd v;
  if (name == "01")
    v = ops::basis_state(0, 1);
  else if (name == "00")
    v = ops::basis_state(0, 0);
  else if (name == "singlet")
    v = ops::singlet();
  else if (name == "triplet")
    v = ops::triplet_zero();
  else if (name == "bell_phi_plus")
    v = ops::bell_phi_plus();
  else
    throw std::invalid_argument("unknown initial_state: " + name);
  return v * v.adjoint();
}

double hermitian_norm(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::string sanitize_cell(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '"') c = ';';
  return s;
}

// KMS residual ||J(-|w|) - e^{-beta |w|} J(|w|)^T||_max, stable at beta = inf.
template <typename Bath>
double kms_residual(const Bath& b, double omega) {
  const double w = std::abs(omega);
  const double f = b.beta.is_infinite() ? (w > 0.0 ? 0.0 : 1.0)
                                        : std::exp(-b.beta.beta * w);
  const Eigen::Matrix2cd lhs = bath::eval_spectrum(b, -w);
  const Eigen::Matrix2cd rhs = f * bath::eval_spectrum(b, w).transpose();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

struct Artifact {
  std::string filename;
  std::string content;
};

std::string render_csv(const io::CsvTable& table) {
  std::ostringstream os;
  table.write(os);
  return os.str();
}

std::vector<std::string> header_comments(const RunConfig& cfg, const RunOptions& opt) {
  std::vector<std::string> c;
  c.push_back("decobound task=" + cfg.task);
  if (!opt.reproducible) {
    const std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    c.push_back(std::string("generated ") + buf);
  }
  return c;
}

Artifact run_spectrum(const RunConfig& cfg, const RunOptions& opt) {
  require_sorted(cfg.omega_grid, "omega_grid");
  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  t.header = {"omega",    "re_J_AA", "im_J_AA", "re_J_AB", "im_J_AB", "re_J_BA",
              "im_J_BA",  "re_J_BB", "im_J_BB", "kms_residual"};
  for (double w : cfg.omega_grid) {
    Eigen::Matrix2cd J;
    double kms = 0.0;
    std::visit(
        [&](const auto& b) {
          J = bath::eval_spectrum(b, w);
          kms = kms_residual(b, w);
        },
        cfg.bath);
    t.add_row({w, J(0, 0).real(), J(0, 0).imag(), J(0, 1).real(), J(0, 1).imag(),
               J(1, 0).real(), J(1, 0).imag(), J(1, 1).real(), J(1, 1).imag(),
               kms});
  }
  return {"spectrum.csv", render_csv(t)};
}

Artifact run_kernels(const RunConfig& cfg, const RunOptions& opt) {
  require_sorted(cfg.t_grid, "t_grid");
  require_sorted(cfg.omega_grid, "omega_grid");
  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  t.comments.push_back(std::string("signs s=") + (cfg.kernel_s == Sign::plus ? "+" : "-") +
                       " s'=" + (cfg.kernel_s2 == Sign::plus ? "+" : "-"));
  t.header = {"t", "omega", "re_phi", "im_phi", "re_psi", "im_psi"};
  for (double tv : cfg.t_grid)
    for (double w : cfg.omega_grid) {
      const complexd phi =
          kernels::eval_phi(cfg.kernel_s, cfg.kernel_s2, tv, w, cfg.qubits.omega0);
      const complexd psi =
          kernels::eval_psi(cfg.kernel_s, cfg.kernel_s2, tv, w, cfg.qubits.omega0);
      t.add_row({tv, w, phi.real(), phi.imag(), psi.real(), psi.imag()});
    }
  return {"kernels.csv", render_csv(t)};
}

const bath::OhmicBath& require_ohmic(const RunConfig& cfg) {
  const auto* b = std::get_if<bath::OhmicBath>(&cfg.bath);
  if (!b)
    throw std::invalid_argument("task '" + cfg.task + "' requires an ohmic bath");
  return *b;
}

const bath::DiscreteBath& require_discrete(const RunConfig& cfg) {
  const auto* b = std::get_if<bath::DiscreteBath>(&cfg.bath);
  if (!b)
    throw std::invalid_argument("task '" + cfg.task + "' requires a discrete bath");
  return *b;
}

Artifact run_generator(const RunConfig& cfg, const RunOptions&) {
  const auto& b = require_ohmic(cfg);
  const auto gen = generator::build_generator(b, cfg.qubits);
  const auto coeff = generator::heff_coefficients(b, cfg.qubits, cfg.qubits.omega0);
  json out = io::generator_to_json(gen);
  out["p"] = io::matrix_to_json(coeff.p);
  out["m"] = io::matrix_to_json(coeff.m);
  const auto fom = dynamics::figure_of_merit(gen);
  out["figure_of_merit"] = {{"t_gate", fom.t_gate},
                            {"t_dec", fom.t_dec},
                            {"q", fom.q},
                            {"zero_rate_warning", fom.zero_rate_warning}};
  return {"generator.json", out.dump(2) + "\n"};
}

Artifact run_evolve(const RunConfig& cfg, const RunOptions& opt) {
  require_sorted(cfg.t_grid, "t_grid");
  const auto& b = require_ohmic(cfg);
  const auto gen = generator::build_generator(b, cfg.qubits);
  const auto liouville = generator::assemble_liouvillian(gen);
  const Eigen::Matrix4cd rho0 = initial_density(cfg.initial_state);
  const auto states = dynamics::propagate(liouville, rho0, cfg.t_grid);
  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  t.header = {"t"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      t.header.push_back("re_" + std::to_string(i) + std::to_string(j));
      t.header.push_back("im_" + std::to_string(i) + std::to_string(j));
    }
  t.header.push_back("concurrence");
  t.header.push_back("purity");
  for (size_t k = 0; k < states.size(); ++k) {
    std::vector<double> row{cfg.t_grid[k]};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        row.push_back(states[k](i, j).real());
        row.push_back(states[k](i, j).imag());
      }
    row.push_back(dynamics::concurrence(states[k]));
    row.push_back((states[k] * states[k]).trace().real());
    t.add_row(row);
  }
  return {"evolve.csv", render_csv(t)};
}

Artifact run_discrete(const RunConfig& cfg, const RunOptions& opt) {
  require_sorted(cfg.t_grid, "t_grid");
  const auto& b = require_discrete(cfg);
  const Eigen::Matrix4cd rho0 = initial_density(cfg.initial_state);
  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  t.header = {"t", "residual", "coherent_norm", "concurrence_estimate"};
  for (double tv : cfg.t_grid) {
    double residual = 0.0, coherent = 0.0;
    if (tv > 0.0) {
      const auto snap = discrete::snapshot(b, cfg.qubits, tv);
      residual = hermitian_norm(snap.dissipator);
      coherent = hermitian_norm(tv * snap.h_eff_t);
    }
    const Eigen::Matrix4cd rho =
        rho0 + discrete::delta_rho2_discrete(b, cfg.qubits, rho0, tv);
    t.add_row({tv, residual, coherent, dynamics::concurrence(rho)});
  }
  return {"discrete.csv", render_csv(t)};
}

// Recover (Omega, amplitude, corr) of the single positive line of a
// mode-shaped discrete bath; used by the oracle task and the detuning sweep.
struct LineShape {
  double Omega = 0.0, amp = 0.0, corr = 0.0;
};

LineShape mode_shape(const bath::DiscreteBath& b) {
  LineShape shape;
  int positives = 0;
  for (const auto& line : b.lines)
    if (line.omega > 0.0) {
      ++positives;
      shape.Omega = line.omega;
      shape.amp = line.weight(0, 0).real();
      if (!(shape.amp > 0.0))
        throw std::invalid_argument("mode-shaped bath needs J_AA > 0");
      shape.corr = line.weight(0, 1).real() / shape.amp;
      const Eigen::Matrix2cd expect =
          shape.amp * (Eigen::Matrix2cd() << 1.0, shape.corr, shape.corr, 1.0)
                          .finished();
      if ((line.weight - expect).cwiseAbs().maxCoeff() > 1e-9 * shape.amp)
        throw std::invalid_argument(
            "bath line is not of the symmetric single-mode form");
    }
  if (positives != 1)
    throw std::invalid_argument("task requires exactly one positive-frequency line");
  return shape;
}

oracle::OracleModel model_from_config(const RunConfig& cfg) {
  const auto& b = require_discrete(cfg);
  const LineShape shape = mode_shape(b);
  const double n = bath::bose_occupation(b.beta, shape.Omega);
  const double g2 = shape.amp / (2.0 * pi * (n + 1.0));
  oracle::Mode mode;
  mode.Omega = shape.Omega;
  mode.g_A = std::sqrt(g2);
  mode.g_B = shape.corr * std::sqrt(g2);
  mode.fock_dim = cfg.fock_dim > 0
                      ? cfg.fock_dim
                      : oracle::OracleModel::fock_dim_for(b.beta, shape.Omega);
  oracle::OracleModel model;
  model.qp = cfg.qubits;
  model.beta = b.beta;
  model.modes = {mode};
  model.validate();
  return model;
}

Artifact run_oracle(const RunConfig& cfg, const RunOptions& opt) {
  require_sorted(cfg.lambda_grid, "lambda_grid");
  const oracle::OracleModel model = model_from_config(cfg);
  const Eigen::Matrix4cd rho0 = initial_density(cfg.initial_state);
  const auto table =
      oracle::convergence_compare(model, rho0, cfg.oracle_time, cfg.lambda_grid);
  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  if (table.regime_warning)
    t.comments.push_back("warning: perturbative regime violated for some lambda");
  t.header = {"lambda", "t", "error", "slope"};
  for (const auto& row : table.rows)
    t.add_row({row.lambda, cfg.oracle_time, row.error, table.slope});
  return {"oracle.csv", render_csv(t)};
}

struct SweepPoint {
  std::vector<double> coords;
  std::vector<double> fields = {std::nan(""), std::nan(""), std::nan("")};
  std::string error;
};

void apply_axis(RunConfig& cfg, const std::string& name, double v) {
  if (name == "lambda") {
    cfg.qubits.lambda = v;
  } else if (name == "beta" || name == "kappa" || name == "omega_c") {
    auto* b = std::get_if<bath::OhmicBath>(&cfg.bath);
    if (!b)
      throw std::invalid_argument("sweep axis '" + name + "' requires an ohmic bath");
    if (name == "beta")
      b->beta.beta = v;
    else if (name == "kappa")
      b->kappa = v;
    else
      b->omega_c = v;
  } else if (name == "detuning") {
    const auto& b = require_discrete(cfg);
    const LineShape shape = mode_shape(b);
    const double n_old = bath::bose_occupation(b.beta, shape.Omega);
    const double g2 = shape.amp / (2.0 * pi * (n_old + 1.0));
    const double Omega_new = cfg.qubits.omega0 + v;
    if (!(Omega_new > 0.0))
      throw std::invalid_argument("detuning pushes the line to Omega <= 0");
    const double n_new = bath::bose_occupation(b.beta, Omega_new);
    cfg.bath = bath::DiscreteBath::single_mode(
        Omega_new, 2.0 * pi * g2 * (n_new + 1.0), shape.corr, b.beta);
  } else {
    throw std::invalid_argument("unknown sweep axis: " + name);
  }
}

SweepPoint sweep_point(const RunConfig& base, const std::vector<size_t>& idx) {
  SweepPoint pt;
  RunConfig cfg = base;
  try {
    for (size_t ax = 0; ax < base.sweep_axes.size(); ++ax) {
      const double v = base.sweep_axes[ax].values[idx[ax]];
      pt.coords.push_back(v);
      apply_axis(cfg, base.sweep_axes[ax].name, v);
    }
    if (const auto* ohmic = std::get_if<bath::OhmicBath>(&cfg.bath)) {
      const auto fom =
          dynamics::figure_of_merit(generator::build_generator(*ohmic, cfg.qubits));
      pt.fields = {fom.t_gate, fom.t_dec, fom.q};
    } else {
      // Discrete bath: evaluate the gate-zero strategy at the first psi zero
      // of the (single) line; the decoherence time is taken from the
      // accumulated dissipator norm over one cycle.
      const auto& b = std::get<bath::DiscreteBath>(cfg.bath);
      const LineShape shape = mode_shape(b);
      const double t_zero =
          kernels::gate_zero_times(shape.Omega, cfg.qubits.omega0, Sign::plus, 1)
              .front();
      const auto snap = discrete::snapshot(b, cfg.qubits, t_zero);
      const double h_ab = std::abs(snap.h_eff_t(2, 1));
      if (h_ab == 0.0) throw std::domain_error("no environment-mediated coupling");
      const double t_gate = pi / (4.0 * h_ab);
      const double rate = hermitian_norm(snap.dissipator) / t_zero;
      const double t_dec = rate > 0.0 ? 1.0 / rate
                                      : std::numeric_limits<double>::infinity();
      pt.fields = {t_gate, t_dec, t_dec / t_gate};
    }
  } catch (const std::exception& e) {
    pt.error = sanitize_cell(e.what());
    while (pt.coords.size() < base.sweep_axes.size())
      pt.coords.push_back(std::nan(""));
  }
  return pt;
}

Artifact run_sweep(const RunConfig& cfg, const RunOptions& opt) {
  if (cfg.sweep_axes.empty() || cfg.sweep_axes.size() > 2)
    throw std::invalid_argument("sweep requires 1 or 2 axes");
  for (const auto& ax : cfg.sweep_axes)
    if (ax.values.empty())
      throw std::invalid_argument("sweep axis '" + ax.name + "' has no values");

  std::vector<std::vector<size_t>> points;
  if (cfg.sweep_axes.size() == 1) {
    for (size_t i = 0; i < cfg.sweep_axes[0].values.size(); ++i) points.push_back({i});
  } else {
    for (size_t i = 0; i < cfg.sweep_axes[0].values.size(); ++i)
      for (size_t j = 0; j < cfg.sweep_axes[1].values.size(); ++j)
        points.push_back({i, j});
  }

  std::vector<SweepPoint> results(points.size());
  const int workers =
      std::min<int>(resolve_workers(opt.workers), static_cast<int>(points.size()));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next.fetch_add(1); k < points.size(); k = next.fetch_add(1))
      results[k] = sweep_point(cfg, points[k]);
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  io::CsvTable t;
  t.comments = header_comments(cfg, opt);
  for (const auto& ax : cfg.sweep_axes) t.header.push_back(ax.name);
  t.header.insert(t.header.end(), {"t_gate", "t_dec", "q", "error"});
  for (const auto& pt : results) {
    std::vector<std::string> row;
    for (double c : pt.coords) row.push_back(io::csv_num(c));
    for (double f : pt.fields) row.push_back(io::csv_num(f));
    row.push_back(pt.error);
    t.add_row(std::move(row));
  }
  return {"sweep.csv", render_csv(t)};
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  static const std::vector<std::string> known = {
      "task",        "bath",       "qubits",    "t_grid",
      "omega_grid",  "lambda_grid", "initial_state", "sweep",
      "fock_dim",    "oracle_time", "kernel_signs"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("unknown config key: " + key);

  RunConfig cfg;
  if (!j.contains("task")) throw std::invalid_argument("config needs a task");
  cfg.task = j.at("task").get<std::string>();
  if (std::find(std::begin(task_names), std::end(task_names), cfg.task) ==
      std::end(task_names))
    throw std::invalid_argument("unknown task: " + cfg.task);

  if (j.contains("bath")) cfg.bath = io::bath_from_json(j.at("bath"));
  if (j.contains("qubits")) {
    const auto& q = j.at("qubits");
    if (q.contains("omega0")) cfg.qubits.omega0 = q.at("omega0").get<double>();
    if (q.contains("lambda")) cfg.qubits.lambda = q.at("lambda").get<double>();
    cfg.qubits.validate();
  }
  if (j.contains("t_grid")) cfg.t_grid = grid_from_json(j.at("t_grid"), "t_grid");
  if (j.contains("omega_grid"))
    cfg.omega_grid = grid_from_json(j.at("omega_grid"), "omega_grid");
  if (j.contains("lambda_grid"))
    cfg.lambda_grid = grid_from_json(j.at("lambda_grid"), "lambda_grid");
  if (j.contains("initial_state"))
    cfg.initial_state = j.at("initial_state").get<std::string>();
  initial_density(cfg.initial_state);  // validate the name early
  if (j.contains("sweep")) {
    for (const auto& ax : j.at("sweep")) {
      SweepAxis axis;
      axis.name = ax.at("name").get<std::string>();
      axis.values = grid_from_json(ax.at("values"), "sweep values");
      cfg.sweep_axes.push_back(std::move(axis));
    }
  }
  if (j.contains("fock_dim")) {
    cfg.fock_dim = j.at("fock_dim").get<int>();
    if (cfg.fock_dim < 0) throw std::invalid_argument("fock_dim must be >= 0");
  }
  if (j.contains("oracle_time")) {
    cfg.oracle_time = j.at("oracle_time").get<double>();
    if (!(cfg.oracle_time > 0.0))
      throw std::invalid_argument("oracle_time must be positive");
  }
  if (j.contains("kernel_signs")) {
    const std::string s = j.at("kernel_signs").get<std::string>();
    if (s.size() != 2)
      throw std::invalid_argument("kernel_signs must be two characters");
    cfg.kernel_s = sign_from_char(s[0]);
    cfg.kernel_s2 = sign_from_char(s[1]);
  }
  return cfg;
}

io::json config_to_json(const RunConfig& cfg) {
  json j;
  j["task"] = cfg.task;
  j["bath"] = io::bath_to_json(cfg.bath);
  j["qubits"] = {{"omega0", cfg.qubits.omega0}, {"lambda", cfg.qubits.lambda}};
  if (!cfg.t_grid.empty()) j["t_grid"] = grid_to_json(cfg.t_grid);
  if (!cfg.omega_grid.empty()) j["omega_grid"] = grid_to_json(cfg.omega_grid);
  if (!cfg.lambda_grid.empty()) j["lambda_grid"] = grid_to_json(cfg.lambda_grid);
  j["initial_state"] = cfg.initial_state;
  if (!cfg.sweep_axes.empty()) {
    j["sweep"] = json::array();
    for (const auto& ax : cfg.sweep_axes)
      j["sweep"].push_back({{"name", ax.name}, {"values", grid_to_json(ax.values)}});
  }
  if (cfg.fock_dim > 0) j["fock_dim"] = cfg.fock_dim;
  j["oracle_time"] = cfg.oracle_time;
  j["kernel_signs"] = std::string() + (cfg.kernel_s == Sign::plus ? '+' : '-') +
                      (cfg.kernel_s2 == Sign::plus ? '+' : '-');
  return j;
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DECOBOUND_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

void emit_error(std::ostream& err, const std::string& category,
                const std::string& message) {
  json j = {{"category", category}, {"message", message}};
  err << j.dump() << "\n";
}

}  // namespace

int run(const RunConfig& cfg, const RunOptions& opt, std::ostream& err_stream) {
  fs::path tmp;
  try {
    std::visit([](const auto& b) { b.validate(); }, cfg.bath);
    cfg.qubits.validate();

    Artifact artifact;
    if (cfg.task == "spectrum")
      artifact = run_spectrum(cfg, opt);
    else if (cfg.task == "kernels")
      artifact = run_kernels(cfg, opt);
    else if (cfg.task == "generator")
      artifact = run_generator(cfg, opt);
    else if (cfg.task == "evolve")
      artifact = run_evolve(cfg, opt);
    else if (cfg.task == "discrete")
      artifact = run_discrete(cfg, opt);
    else if (cfg.task == "oracle")
      artifact = run_oracle(cfg, opt);
    else if (cfg.task == "sweep")
      artifact = run_sweep(cfg, opt);
    else
      throw std::invalid_argument("unknown task: " + cfg.task);

    fs::create_directories(opt.out_dir);
    tmp = opt.out_dir / ("." + artifact.filename + ".tmp");
    {
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      os << artifact.content;
      if (!os) throw numerical_error("failed writing " + tmp.string());
    }
    fs::rename(tmp, opt.out_dir / artifact.filename);
    return exit_ok;
  } catch (const invariant_error& e) {
    if (!tmp.empty()) fs::remove(tmp);
    emit_error(err_stream, "invariant", e.what());
    return exit_invariant;
  } catch (const numerical_error& e) {
    if (!tmp.empty()) fs::remove(tmp);
    emit_error(err_stream, "numerical", e.what());
    return exit_numerical;
  } catch (const std::invalid_argument& e) {
    if (!tmp.empty()) fs::remove(tmp);
    emit_error(err_stream, "schema", e.what());
    return exit_schema;
  } catch (const std::domain_error& e) {
    if (!tmp.empty()) fs::remove(tmp);
    emit_error(err_stream, "schema", e.what());
    return exit_schema;
  } catch (const std::exception& e) {
    if (!tmp.empty()) fs::remove(tmp);
    emit_error(err_stream, "numerical", e.what());
    return exit_numerical;
  }
}

int run_file(const fs::path& config_path, const RunOptions& opt,
             std::ostream& err_stream) {
  RunConfig cfg;
  try {
    std::ifstream is(config_path);
    if (!is) throw std::invalid_argument("cannot read " + config_path.string());
    cfg = config_from_json(json::parse(is));
  } catch (const invariant_error& e) {
    emit_error(err_stream, "invariant", e.what());
    return exit_invariant;
  } catch (const std::exception& e) {
    emit_error(err_stream, "schema", e.what());
    return exit_schema;
  }
  return run(cfg, opt, err_stream);
}

}  // namespace decobound::cli
