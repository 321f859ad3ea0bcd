// io.hpp -- JSON serialization of baths and generators, CSV formatting.
#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "decobound/bath.hpp"
#include "decobound/generator.hpp"

namespace decobound::io {

using json = nlohmann::json;
using BathSpec = std::variant<bath::OhmicBath, bath::DiscreteBath>;

// beta serialized as a number, or the string "inf" at zero temperature.
json beta_to_json(InverseTemperature beta);
InverseTemperature beta_from_json(const json& j);

// {"type":"ohmic","alpha":..,"omega_c":..,"kappa":..,"beta":..} or
// {"type":"discrete","beta":..,"lines":[{"omega":..,"J":[[re,im] x 4]}]}
json bath_to_json(const BathSpec& spec);
BathSpec bath_from_json(const json& j);

// Dense complex matrices as row-major lists of [re, im] pairs.
json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const json& j, int rows, int cols);

json generator_to_json(const generator::EffectiveGenerator& gen);

// Locale-independent decimal formatting, 17 significant digits.
std::string csv_num(double x);

struct CsvTable {
  std::vector<std::string> comments;  // emitted as leading '# ' lines
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  void add_row(std::vector<std::string> cells);
  void write(std::ostream& os) const;
};

}  // namespace decobound::io
