#pragma once

#include <utility>
#include <vector>

namespace photonbec {

/// Single-mode microlaser rate-equation parameters.
///   dP/dt = gamma*beta*N*(P + 1) - kappa*P
///   dN/dt = R_p - gamma*N - gamma*beta*N*P
struct MicrolaserParams {
  double beta;       // fraction of spontaneous emission into the cavity mode, (0, 1]
  double gamma;      // total spontaneous emission rate, 1/time
  double kappa;      // cavity loss rate, 1/time
  double pump_rate;  // R_p, excitations/time

  double rho() const { return pump_rate / kappa; }  // pump in units of cavity loss
  void validate() const;                            // throws std::domain_error
};

struct MicrolaserState {
  double photons = 0.0;      // P
  double excitations = 0.0;  // N
  double time = 0.0;
};

/// beta from the Purcell factor: F_P / (1 + F_P).
double purcell_beta(double f_p);

/// Steady-state photon number, the positive root of
///   beta*P^2 + (1 - beta*rho)*P - beta*rho = 0.
/// Evaluated in the cancellation-free form on both sides of threshold.
double steady_state_photons(double beta, double rho);
double steady_state_photons(const MicrolaserParams& params);

/// Steady-state excitation number N = R_p / (gamma * (1 + beta*P)).
double steady_state_excitations(const MicrolaserParams& params);

/// Time-domain integration with adaptive RK45, step bounded by dt_max.
/// P and N are clamped nonnegative after each accepted step.
std::vector<MicrolaserState> integrate(const MicrolaserParams& params, MicrolaserState initial,
                                       double t_end, double dt_max);

/// (rho, P) steady-state pairs along a positive ascending pump grid.
std::vector<std::pair<double, double>> threshold_curve(double beta,
                                                       const std::vector<double>& rho_grid);

/// Pump value maximizing d^2(log P)/d(log rho)^2 on the given curve
/// (finite differences; the grid should be logarithmic through the knee).
double curvature_threshold(const std::vector<std::pair<double, double>>& curve);

/// Alternative convention: pump at which P = 1, i.e. rho = (1 + beta)/(2*beta).
double unity_threshold(double beta);

}  // namespace photonbec
