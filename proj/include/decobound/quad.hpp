// quad.hpp -- adaptive quadrature and principal-value integration.
#pragma once

#include <functional>
#include <vector>

#include "decobound/types.hpp"

namespace decobound::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 15;
  // Oscillatory integrands: pre-split [a, b] into panels no wider than this
  // before going adaptive (infinity = single panel).
  double max_panel_width = std::numeric_limits<double>::infinity();
  // Known non-smooth points (kinks) of the integrand; panel boundaries are
  // placed there so the adaptive rule never straddles one.
  std::vector<double> split_points;
};

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});
complexd integrate(const std::function<complexd(double)>& f, double a, double b,
                   const Options& opt = {});

// PV of \int_a^b f(w)/(w - pole) dw with a < pole < b.  On a panel symmetric
// about the pole the integrand is regularized by subtraction,
//   \int [f(w) - f(pole)]/(w - pole) dw + f(pole) ln|(b'-pole)/(pole-a')|,
// and the remaining intervals are handled by plain adaptive panels.
complexd pv_integral(const std::function<complexd(double)>& f, double pole,
                     double a, double b, const Options& opt = {});

}  // namespace decobound::quad
