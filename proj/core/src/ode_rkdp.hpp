#pragma once

// Internal adaptive Dormand-Prince 5(4) integrator for the small loss
// ODEs (1-2 state variables). Not installed.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "trigas/errors.hpp"

namespace trigas::detail {

template <size_t N>
using State = std::array<double, N>;

// Integrates y' = f(t, y) from (t0, y0) to t1. Error per step is kept
// below atol[i] + rtol*|y[i]| componentwise.
template <size_t N>
State<N> rkdp_integrate(const std::function<State<N>(double, const State<N>&)>& f, double t0,
                        State<N> y, double t1, double rtol, const State<N>& atol) {
  // Butcher tableau, Dormand & Prince (1980).
  constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  // b - b* (difference to the embedded 4th-order solution).
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  double t = t0;
  const double span = t1 - t0;
  if (span == 0.0) return y;
  double h = span / 16.0;
  const double h_min = std::max(span * 1e-14, 1e-300);

  State<N> k1 = f(t, y);
  int rejected_in_a_row = 0;
  while (t < t1) {
    h = std::min(h, t1 - t);
    State<N> tmp, k2, k3, k4, k5, k6, k7, y5;

    for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    k2 = f(t + c2 * h, tmp);
    for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = f(t + c3 * h, tmp);
    for (size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = f(t + c4 * h, tmp);
    for (size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = f(t + c5 * h, tmp);
    for (size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    k6 = f(t + h, tmp);
    for (size_t i = 0; i < N; ++i)
      y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = f(t + h, y5);

    double err = 0.0;
    for (size_t i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double scale = atol[i] + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err = std::max(err, std::abs(ei) / scale);
    }

    if (err <= 1.0 || h <= h_min) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 64) {
      throw IntegrationError("ODE step failure at t = " + std::to_string(t) + " s");
    }
    const double factor =
        err > 0.0 ? std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0) : 5.0;
    h = std::max(h * factor, h_min);
    if (!std::isfinite(h) || !std::isfinite(y[0]))
      throw IntegrationError("ODE state non-finite at t = " + std::to_string(t) + " s");
  }
  return y;
}

}  // namespace trigas::detail
