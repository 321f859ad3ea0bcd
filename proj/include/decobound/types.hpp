// types.hpp -- shared parameter types and error categories.
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace decobound {

using complexd = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

// A computation failed to reach its target tolerance.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structural invariant (positivity, hermiticity, KMS pairing, ...) is violated.
struct invariant_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inverse temperature in units of 1/omega0 (hbar = k_B = 1).
// beta = +infinity selects the zero-temperature branches everywhere.
struct InverseTemperature {
  double beta = 1.0;

  static InverseTemperature infinite() {
    return {std::numeric_limits<double>::infinity()};
  }
  bool is_infinite() const { return std::isinf(beta); }
  void validate() const {
    if (std::isnan(beta) || beta <= 0.0)
      throw std::invalid_argument("inverse temperature must be positive or infinite");
  }
};

struct QubitParams {
  double omega0 = 1.0;  // single-spin-flip frequency, identical for both qubits
  double lambda = 0.1;  // environment coupling strength

  void validate() const {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
    if (!(lambda >= 0.0) || std::isnan(lambda))
      throw std::invalid_argument("lambda must be non-negative");
  }
};

// Sign index s = +/-: sigma_+ rotates as e^{-i omega0 t}, sigma_- as e^{+i omega0 t}.
enum class Sign : int { plus = +1, minus = -1 };

inline constexpr double sgn(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }
inline constexpr Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline constexpr Sign signs[2] = {Sign::plus, Sign::minus};

}  // namespace decobound
