// kernels.hpp -- closed forms of the finite-time kernels phi and psi.
//
// With detunings x = omega - s*omega0, y = omega + s'*omega0 and the
// elementary integral E(u, t) = \int_0^t e^{iut'} dt' = t cis(ut/2) sinc(ut/2),
//
//   psi_{ss'}(t, omega) = \int_0^t dt' \int_0^t  dt'' e^{ixt'} e^{-iyt''}
//                       = E(x, t) conj(E(y, t))
//   phi_{ss'}(t, omega) = \int_0^t dt' \int_{t'}^t dt'' e^{ixt'} e^{-iyt''}
//
// All apparent singularities (x -> 0, y -> 0) are removable and evaluated by
// stable reformulations, so both kernels are smooth in omega for every t.
#pragma once

#include <vector>

#include "decobound/types.hpp"

namespace decobound::kernels {

// \int_0^t e^{iut'} dt', stable at u = 0.
complexd elementary_integral(double u, double t);

complexd eval_phi(Sign s, Sign s2, double t, double omega, double omega0);
complexd eval_psi(Sign s, Sign s2, double t, double omega, double omega0);

// Times t_k = 2 pi k / |Omega - s*omega0|, k = 1..k_max, at which
// psi_{s,-s}(t, Omega) vanishes.
std::vector<double> gate_zero_times(double Omega, double omega0, Sign s, int k_max);

}  // namespace decobound::kernels
