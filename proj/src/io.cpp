#include "decobound/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace decobound::io {

json beta_to_json(InverseTemperature beta) {
  beta.validate();
  if (beta.is_infinite()) return json("inf");
  return json(beta.beta);
}

InverseTemperature beta_from_json(const json& j) {
  InverseTemperature beta;
  if (j.is_string()) {
    if (j.get<std::string>() != "inf")
      throw std::invalid_argument("beta must be a positive number or \"inf\"");
    beta = InverseTemperature::infinite();
  } else if (j.is_number()) {
    beta.beta = j.get<double>();
  } else {
    throw std::invalid_argument("beta must be a positive number or \"inf\"");
  }
  beta.validate();
  return beta;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.push_back({m(i, j).real(), m(i, j).imag()});
  return out;
}

Eigen::MatrixXcd matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw std::invalid_argument("matrix entry count mismatch");
  Eigen::MatrixXcd m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c, ++k) {
      const json& e = j[k];
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix entries must be [re, im] pairs");
      m(i, c) = complexd(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

json bath_to_json(const BathSpec& spec) {
  json out;
  if (const auto* o = std::get_if<bath::OhmicBath>(&spec)) {
    out["type"] = "ohmic";
    out["alpha"] = o->alpha;
    out["omega_c"] = o->omega_c;
    out["kappa"] = o->kappa;
    out["beta"] = beta_to_json(o->beta);
  } else {
    const auto& d = std::get<bath::DiscreteBath>(spec);
    out["type"] = "discrete";
    out["beta"] = beta_to_json(d.beta);
    out["lines"] = json::array();
    for (const auto& line : d.lines)
      out["lines"].push_back(
          {{"omega", line.omega}, {"J", matrix_to_json(line.weight)}});
  }
  return out;
}

BathSpec bath_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("bath spec must be an object with a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "ohmic") {
    bath::OhmicBath b;
    b.alpha = j.at("alpha").get<double>();
    b.omega_c = j.at("omega_c").get<double>();
    b.kappa = j.at("kappa").get<double>();
    b.beta = beta_from_json(j.at("beta"));
    b.validate();
    return b;
  }
  if (type == "discrete") {
    bath::DiscreteBath b;
    b.beta = beta_from_json(j.at("beta"));
    for (const auto& line : j.at("lines"))
      b.lines.push_back({line.at("omega").get<double>(),
                         matrix_from_json(line.at("J"), 2, 2)});
    b.validate();
    return b;
  }
  throw std::invalid_argument("unknown bath type: " + type);
}

json generator_to_json(const generator::EffectiveGenerator& gen) {
  json out;
  out["h_eff"] = matrix_to_json(gen.h_eff);
  out["gamma_plus"] = matrix_to_json(gen.rates.gamma_plus);
  out["gamma_minus"] = matrix_to_json(gen.rates.gamma_minus);
  out["lindblads"] = json::array();
  for (const auto& L : gen.lindblads) out["lindblads"].push_back(matrix_to_json(L));
  return out;
}

std::string csv_num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(csv_num(v));
  rows.push_back(std::move(cells));
}

void CsvTable::add_row(std::vector<std::string> cells) {
  rows.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& os) const {
  for (const auto& c : comments) os << "# " << c << "\n";
  for (size_t i = 0; i < header.size(); ++i)
    os << header[i] << (i + 1 < header.size() ? "," : "");
  os << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i)
      os << row[i] << (i + 1 < row.size() ? "," : "");
    os << "\n";
  }
}

}  // namespace decobound::io
