#include "decobound/quad.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace decobound::quad {

namespace {

using gk = boost::math::quadrature::gauss_kronrod<double, 15>;

// Adaptive panel integration with an error check against the options.
template <typename Value, typename F>
Value integrate_impl(const F& f, double a, double b, const Options& opt) {
  if (!(a < b)) {
    if (a == b) return Value{};
    throw std::invalid_argument("integration bounds out of order");
  }
  // Segment at the declared kinks, then subdivide each segment down to the
  // panel width bound.
  std::vector<double> bounds{a};
  if (!opt.split_points.empty()) {
    std::vector<double> cuts(opt.split_points);
    std::sort(cuts.begin(), cuts.end());
    for (double c : cuts)
      if (c > bounds.back() && c < b) bounds.push_back(c);
  }
  bounds.push_back(b);

  Value total{};
  double err_total = 0.0;
  double l1 = 0.0;
  for (size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
    const double sa = bounds[seg], sb = bounds[seg + 1];
    int n_panels = 1;
    if (std::isfinite(opt.max_panel_width) && opt.max_panel_width > 0.0)
      n_panels =
          std::max(1, static_cast<int>(std::ceil((sb - sa) / opt.max_panel_width)));
    const double h = (sb - sa) / n_panels;
    for (int k = 0; k < n_panels; ++k) {
      double pa = sa + k * h;
      double pb = (k + 1 == n_panels) ? sb : sa + (k + 1) * h;
      double err = 0.0, panel_l1 = 0.0;
      total += gk::integrate(f, pa, pb, opt.max_depth, opt.rel_tol, &err, &panel_l1);
      err_total += err;
      l1 += panel_l1;
    }
  }
  if (err_total > opt.abs_tol && err_total > opt.rel_tol * std::max(l1, 1e-300))
    throw numerical_error("quadrature did not converge: error estimate " +
                          std::to_string(err_total));
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt) {
  return integrate_impl<double>(f, a, b, opt);
}

complexd integrate(const std::function<complexd(double)>& f, double a, double b,
                   const Options& opt) {
  return integrate_impl<complexd>(f, a, b, opt);
}

complexd pv_integral(const std::function<complexd(double)>& f, double pole,
                     double a, double b, const Options& opt) {
  if (!(a < pole && pole < b))
    throw std::invalid_argument("pole must lie strictly inside the PV window");

  // Symmetric panel around the pole; the subtracted integrand is smooth there.
  // The panel is capped so the difference quotient never has to be resolved
  // across a wide domain (the leftovers integrate plainly).
  const double scale = std::max(1.0, std::abs(pole));
  const double d = std::min({pole - a, b - pole, scale});
  const complexd f_pole = f(pole);
  // Central difference used within a whisker of the pole where the difference
  // quotient would lose all digits to cancellation.
  const double whisker = 1e-7 * scale;
  const double h_fd = 1e-6 * scale;
  const complexd df_pole = (f(pole + h_fd) - f(pole - h_fd)) / (2.0 * h_fd);
  auto subtracted = [&](double w) -> complexd {
    const double u = w - pole;
    if (std::abs(u) < whisker) return df_pole;
    return (f(w) - f_pole) / u;
  };
  // PV of the 1/(w - pole) factor over the symmetric panel is zero, so the
  // panel reduces to the subtracted integral; the outer leftovers contain no
  // pole and integrate plainly.
  complexd result = integrate_impl<complexd>(subtracted, pole - d, pole + d, opt);
  auto g = [&](double w) { return f(w) / (w - pole); };
  if (pole - d > a) result += integrate_impl<complexd>(g, a, pole - d, opt);
  if (b - pole > d) result += integrate_impl<complexd>(g, pole + d, b, opt);
  return result;
}

}  // namespace decobound::quad
