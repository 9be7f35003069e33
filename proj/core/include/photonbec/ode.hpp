#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "photonbec/errors.hpp"

namespace photonbec {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  double dt_max = std::numeric_limits<double>::infinity();
  double dt_init = 0.0;       // 0 -> choose from dt_max / first derivative
  double safety = 0.9;
  bool clamp_nonnegative = false;  // zero out small negative components after a step
};

template <std::size_t N>
struct OdeSample {
  double t;
  std::array<double, N> y;
};

// Dormand-Prince embedded 5(4) pair with standard step-size control.
// F: void(double t, const std::array<double, N>& y, std::array<double, N>& dydt).
// Records every accepted step; throws StiffnessError on step underflow.
template <std::size_t N, typename F>
std::vector<OdeSample<N>> integrate_dopri5(F&& f, std::array<double, N> y0, double t0,
                                           double t1, const OdeOptions& opt = {}) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // difference between 5th- and embedded 4th-order weights
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  std::vector<OdeSample<N>> out;
  out.push_back({t0, y0});

  std::array<double, N> k1, k2, k3, k4, k5, k6, k7, yt, y5;
  double t = t0;
  auto y = y0;
  f(t, y, k1);

  double dt = opt.dt_init;
  if (dt <= 0.0) {
    double dnorm = 0.0, ynorm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      dnorm += k1[i] * k1[i];
      ynorm += y[i] * y[i];
    }
    dt = (dnorm > 0.0) ? 0.01 * std::sqrt((ynorm + 1.0) / dnorm) : 0.01 * (t1 - t0);
    dt = std::min(dt, opt.dt_max);
  }
  const double dt_floor = 1e-14 * (t1 - t0);

  while (t < t1) {
    dt = std::min({dt, opt.dt_max, t1 - t});
    if (dt < dt_floor)
      throw StiffnessError("integrate_dopri5: step size underflow at t=" + std::to_string(t), t);

    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + dt * a21 * k1[i];
    f(t + c2 * dt, yt, k2);
    for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + dt * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * dt, yt, k3);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + dt * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * dt, yt, k4);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + dt * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * dt, yt, k5);
    for (std::size_t i = 0; i < N; ++i)
      yt[i] = y[i] + dt * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + dt, yt, k6);
    for (std::size_t i = 0; i < N; ++i)
      y5[i] = y[i] + dt * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(t + dt, y5, k7);  // FSAL stage

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double ei = dt * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                              e7 * k7[i]);
      const double scale = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
      err += (ei / scale) * (ei / scale);
    }
    err = std::sqrt(err / N);

    if (err <= 1.0) {
      t += dt;
      y = y5;
      if (opt.clamp_nonnegative)
        for (std::size_t i = 0; i < N; ++i)
          if (y[i] < 0.0) y[i] = 0.0;
      k1 = k7;
      if (opt.clamp_nonnegative) f(t, y, k1);  // clamping invalidates FSAL
      out.push_back({t, y});
    }
    const double grow = (err > 0.0) ? opt.safety * std::pow(err, -0.2) : 5.0;
    dt *= std::min(5.0, std::max(0.2, grow));
  }
  return out;
}

}  // namespace photonbec
