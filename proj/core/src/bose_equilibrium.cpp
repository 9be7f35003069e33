#include "photonbec/bose_equilibrium.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "photonbec/constants.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

void check_spectrum(const TrapSpectrum& spec) {
  if (!(spec.x > 0.0) || !std::isfinite(spec.x))
    throw std::domain_error("TrapSpectrum: level spacing x must be positive and finite");
  if (spec.i_max < 1)
    throw std::domain_error("TrapSpectrum: i_max must be a positive integer");
}

// Upper bracket for mu. n_ground ~ 1/(-mu) near zero, so -1e-14 admits
// condensates up to ~1e14 particles.
constexpr double kMuUpper = -1e-14;
constexpr double kRelTol = 1e-10;

}  // namespace

TrapSpectrum TrapSpectrum::with_default_truncation(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("TrapSpectrum: level spacing x must be positive and finite");
  int i_max = static_cast<int>(std::ceil(50.0 / x));
  if (i_max < 64) i_max = 64;
  return TrapSpectrum{x, i_max};
}

double be_occupancy(double eps_reduced, double mu) {
  const double d = eps_reduced - mu;
  if (!(d > 0.0))
    throw std::domain_error("be_occupancy: requires mu < eps (occupancy diverges otherwise)");
  return 1.0 / std::expm1(d);  // expm1 keeps precision for small eps - mu
}

double total_number(const TrapSpectrum& spec, double mu) {
  check_spectrum(spec);
  if (!(mu < 0.0))
    throw std::domain_error("total_number: requires mu < 0 (ground-state energy is 0)");
  double sum = 0.0;
  for (int i = spec.i_max; i >= 0; --i)  // ascending magnitude, better rounding
    sum += (i + 1) / std::expm1(i * spec.x - mu);
  return sum;
}

double total_number_derivative(const TrapSpectrum& spec, double mu) {
  check_spectrum(spec);
  if (!(mu < 0.0))
    throw std::domain_error("total_number_derivative: requires mu < 0");
  double sum = 0.0;
  for (int i = spec.i_max; i >= 0; --i) {
    const double f = 1.0 / std::expm1(i * spec.x - mu);
    sum += (i + 1) * f * (1.0 + f);
  }
  return sum;
}

double critical_number(const TrapSpectrum& spec) {
  check_spectrum(spec);
  return (constants::pi * constants::pi / 6.0) / (spec.x * spec.x);
}

EquilibriumState solve_mu(const TrapSpectrum& spec, double n_target) {
  check_spectrum(spec);
  if (!(n_target > 0.0) || !std::isfinite(n_target))
    throw std::domain_error("solve_mu: n_target must be positive and finite");

  // Work on u = -ln(-mu): mu in (-inf, 0) maps to u in (-inf, +inf) and
  // total_number stays monotone increasing in u.
  const auto mu_of = [](double u) { return -std::exp(-u); };

  double u_hi = -std::log(-kMuUpper);
  if (total_number(spec, mu_of(u_hi)) < n_target)
    throw ConvergenceError("solve_mu: n_target exceeds the representable range (mu bracket "
                           "capped at -1e-14)");

  // Expand the lower end until the target is bracketed. mu(u) = -e^{-u}
  // reaches astronomically negative values within ~60 doublings.
  double u_lo = 0.0;
  double step = 1.0;
  for (int k = 0; total_number(spec, mu_of(u_lo)) > n_target; ++k) {
    if (k > 80)
      throw ConvergenceError("solve_mu: failed to bracket mu from below");
    u_lo -= step;
    step *= 2.0;
  }

  // Bisection on u gives a reliable close bracket, Newton on mu finishes.
  for (int k = 0; k < 64; ++k) {
    const double u_mid = 0.5 * (u_lo + u_hi);
    if (total_number(spec, mu_of(u_mid)) < n_target)
      u_lo = u_mid;
    else
      u_hi = u_mid;
  }

  double mu_lo = mu_of(u_lo), mu_hi = mu_of(u_hi);
  double mu = 0.5 * (mu_lo + mu_hi);
  double n = total_number(spec, mu);
  bool converged = std::abs(n - n_target) <= kRelTol * n_target;
  for (int k = 0; k < 200 && !converged; ++k) {
    const double deriv = total_number_derivative(spec, mu);
    double mu_next = mu - (n - n_target) / deriv;
    if (!(mu_next > mu_lo) || !(mu_next < mu_hi))
      mu_next = 0.5 * (mu_lo + mu_hi);  // Newton left the bracket: bisect
    if (total_number(spec, mu_next) < n_target)
      mu_lo = mu_next;
    else
      mu_hi = mu_next;
    mu = mu_next;
    n = total_number(spec, mu);
    converged = std::abs(n - n_target) <= kRelTol * n_target;
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "solve_mu: no convergence to " << kRelTol << " relative at n_target=" << n_target
        << " (x=" << spec.x << ")";
    throw ConvergenceError(msg.str());
  }

  EquilibriumState state;
  state.mu = mu;
  state.n_total = n;
  state.n_ground = be_occupancy(0.0, mu);
  state.level_populations.reserve(spec.i_max + 1);
  for (int i = 0; i <= spec.i_max; ++i)
    state.level_populations.push_back((i + 1) * be_occupancy(i * spec.x, mu));
  return state;
}

std::vector<CondensatePoint> condensate_curve(const TrapSpectrum& spec,
                                              const std::vector<double>& n_grid) {
  check_spectrum(spec);
  for (std::size_t j = 0; j < n_grid.size(); ++j) {
    if (!(n_grid[j] > 0.0))
      throw std::domain_error("condensate_curve: n_grid must be strictly positive");
    if (j > 0 && !(n_grid[j] > n_grid[j - 1]))
      throw std::domain_error("condensate_curve: n_grid must be sorted ascending");
  }
  std::vector<CondensatePoint> curve;
  curve.reserve(n_grid.size());
  for (std::size_t j = 0; j < n_grid.size(); ++j) {
    try {
      const EquilibriumState s = solve_mu(spec, n_grid[j]);
      curve.push_back({s.n_total, s.n_ground, s.mu});
    } catch (const ConvergenceError& e) {
      std::ostringstream msg;
      msg << "condensate_curve: grid point " << j << " (n_total=" << n_grid[j]
          << ") failed: " << e.what();
      throw ConvergenceError(msg.str());
    }
  }
  return curve;
}

}  // namespace photonbec
