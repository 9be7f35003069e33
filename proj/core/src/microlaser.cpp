#include "photonbec/microlaser.hpp"

#include <cmath>
#include <stdexcept>

#include "photonbec/ode.hpp"

namespace photonbec {

void MicrolaserParams::validate() const {
  if (!(beta > 0.0) || !(beta <= 1.0))
    throw std::domain_error("MicrolaserParams: beta must lie in (0, 1]");
  if (!(gamma > 0.0)) throw std::domain_error("MicrolaserParams: gamma must be positive");
  if (!(kappa > 0.0)) throw std::domain_error("MicrolaserParams: kappa must be positive");
  if (!(pump_rate >= 0.0))
    throw std::domain_error("MicrolaserParams: pump_rate must be nonnegative");
}

double purcell_beta(double f_p) {
  if (!(f_p >= 0.0)) throw std::domain_error("purcell_beta: Purcell factor must be >= 0");
  return f_p / (1.0 + f_p);
}

double steady_state_photons(double beta, double rho) {
  if (!(beta > 0.0) || !(beta <= 1.0))
    throw std::domain_error("steady_state_photons: beta must lie in (0, 1]");
  if (!(rho >= 0.0)) throw std::domain_error("steady_state_photons: rho must be >= 0");
  // beta*P^2 + b*P + c = 0 with b = 1 - beta*rho, c = -beta*rho.
  // Below threshold b > 0 and the textbook (-b + sqrt)/2a form cancels
  // catastrophically; use the conjugate root c/q there.
  const double b = 1.0 - beta * rho;
  const double s = std::sqrt(b * b + 4.0 * beta * beta * rho);
  if (b <= 0.0) return (-b + s) / (2.0 * beta);
  return 2.0 * rho / (b + s);
}

double steady_state_photons(const MicrolaserParams& params) {
  params.validate();
  return steady_state_photons(params.beta, params.rho());
}

double steady_state_excitations(const MicrolaserParams& params) {
  params.validate();
  const double p = steady_state_photons(params.beta, params.rho());
  return params.pump_rate / (params.gamma * (1.0 + params.beta * p));
}

std::vector<MicrolaserState> integrate(const MicrolaserParams& params, MicrolaserState initial,
                                       double t_end, double dt_max) {
  params.validate();
  if (!(t_end > 0.0)) throw std::domain_error("integrate: t_end must be positive");
  if (!(dt_max > 0.0)) throw std::domain_error("integrate: dt_max must be positive");
  if (!(initial.photons >= 0.0) || !(initial.excitations >= 0.0))
    throw std::domain_error("integrate: initial P and N must be nonnegative");

  const double beta = params.beta, gamma = params.gamma, kappa = params.kappa,
               rp = params.pump_rate;
  auto rhs = [=](double /*t*/, const std::array<double, 2>& y, std::array<double, 2>& dydt) {
    const double p = y[0], n = y[1];
    dydt[0] = gamma * beta * n * (p + 1.0) - kappa * p;
    dydt[1] = rp - gamma * n - gamma * beta * n * p;
  };

  OdeOptions opt;
  opt.dt_max = dt_max;
  opt.clamp_nonnegative = true;
  const auto sol = integrate_dopri5<2>(rhs, {initial.photons, initial.excitations},
                                       initial.time, initial.time + t_end, opt);

  std::vector<MicrolaserState> traj;
  traj.reserve(sol.size());
  for (const auto& s : sol) traj.push_back({s.y[0], s.y[1], s.t});
  return traj;
}

std::vector<std::pair<double, double>> threshold_curve(double beta,
                                                       const std::vector<double>& rho_grid) {
  for (std::size_t j = 0; j < rho_grid.size(); ++j) {
    if (!(rho_grid[j] > 0.0))
      throw std::domain_error("threshold_curve: rho grid must be strictly positive");
    if (j > 0 && !(rho_grid[j] > rho_grid[j - 1]))
      throw std::domain_error("threshold_curve: rho grid must be sorted ascending");
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(rho_grid.size());
  for (double rho : rho_grid) curve.emplace_back(rho, steady_state_photons(beta, rho));
  return curve;
}

double curvature_threshold(const std::vector<std::pair<double, double>>& curve) {
  if (curve.size() < 3)
    throw std::domain_error("curvature_threshold: need at least 3 curve points");
  double best = curve[1].first;
  double best_d2 = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j + 1 < curve.size(); ++j) {
    const double tm = std::log(curve[j - 1].first), t0 = std::log(curve[j].first),
                 tp = std::log(curve[j + 1].first);
    const double ym = std::log(curve[j - 1].second), y0 = std::log(curve[j].second),
                 yp = std::log(curve[j + 1].second);
    // second difference on a possibly nonuniform log grid
    const double d2 = 2.0 * (ym * (tp - t0) - y0 * (tp - tm) + yp * (t0 - tm)) /
                      ((t0 - tm) * (tp - t0) * (tp - tm));
    if (d2 > best_d2) {
      best_d2 = d2;
      best = curve[j].first;
    }
  }
  return best;
}

double unity_threshold(double beta) {
  if (!(beta > 0.0) || !(beta <= 1.0))
    throw std::domain_error("unity_threshold: beta must lie in (0, 1]");
  return (1.0 + beta) / (2.0 * beta);
}

}  // namespace photonbec
