#include "decobound/kernels.hpp"

#include <cmath>

namespace decobound::kernels {

namespace {

const complexd i1(0.0, 1.0);

double sinc(double z) {
  if (std::abs(z) < 1e-4) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0);
  }
  return std::sin(z) / z;
}

// (sin th - th)/th^2: the odd companion of sinc, -th/6 near zero.  The direct
// form loses all digits for small th, so a factorial series covers |th| < 1.
double sin_deficit(double th) {
  if (std::abs(th) < 1.0) {
    const double th2 = th * th;
    double term = -th / 6.0;
    double sum = term;
    for (int k = 2; k <= 12; ++k) {
      term *= -th2 / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  return (std::sin(th) - th) / (th * th);
}

void check_args(double t, double omega0) {
  if (!(t >= 0.0)) throw std::domain_error("kernel time must be non-negative");
  if (!(omega0 > 0.0)) throw std::domain_error("omega0 must be positive");
}

}  // namespace

complexd elementary_integral(double u, double t) {
  const double h = 0.5 * u * t;
  return t * sinc(h) * complexd(std::cos(h), std::sin(h));
}

complexd eval_psi(Sign s, Sign s2, double t, double omega, double omega0) {
  check_args(t, omega0);
  const double x = omega - sgn(s) * omega0;
  const double y = omega + sgn(s2) * omega0;
  // Separable product of the two one-dimensional time integrals; for s2 = -s
  // this is |E(x,t)|^2, real and non-negative by construction.
  return elementary_integral(x, t) * std::conj(elementary_integral(y, t));
}

complexd eval_phi(Sign s, Sign s2, double t, double omega, double omega0) {
  check_args(t, omega0);
  const double x = omega - sgn(s) * omega0;
  const double y = omega + sgn(s2) * omega0;

  if (s2 == flip(s)) {
    // y = x: phi = t^2 [ sinc^2(xt/2)/2 + i (sin xt - xt)/(xt)^2 ],
    // with the resonant limit t^2 (1/2 - i xt/6 + ...).
    const double th = x * t;
    const double half = sinc(0.5 * th);
    return t * t * complexd(0.5 * half * half, sin_deficit(th));
  }

  // s2 = s: detunings x and y differ by the constant D = -2 s omega0, so at
  // most one of them can be small; pick the form regular at the near one.
  const double D = x - y;
  if (std::abs(y) >= omega0) {
    const complexd eyt(std::cos(y * t), -std::sin(y * t));  // e^{-iyt}
    return (elementary_integral(D, t) - eyt * elementary_integral(x, t)) / (i1 * y);
  }
  return i1 / x *
         (std::conj(elementary_integral(y, t)) - elementary_integral(D, t));
}

std::vector<double> gate_zero_times(double Omega, double omega0, Sign s, int k_max) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be positive");
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const double delta = Omega - sgn(s) * omega0;
  if (std::abs(delta) <= 1e-12 * std::max({1.0, std::abs(Omega), omega0}))
    throw std::domain_error("resonant line has no psi zeros");
  std::vector<double> times;
  times.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) times.push_back(2.0 * pi * k / std::abs(delta));
  return times;
}

}  // namespace decobound::kernels
