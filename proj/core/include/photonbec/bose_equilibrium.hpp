#pragma once

#include <vector>

namespace photonbec {

/// Discrete level structure of a 2D isotropic harmonic trap in reduced units.
/// Level i has energy i*x (units of k_B T) and degeneracy i+1.
struct TrapSpectrum {
  double x;    // level spacing, hbar*omega / k_B T, > 0
  int i_max;   // highest level index kept in sums

  // i_max = max(64, ceil(50/x)): occupancy beyond 50 thermal energies is
  // < e^-50 per level while degeneracy grows only linearly.
  static TrapSpectrum with_default_truncation(double x);
};

/// Chemical potential (units of k_B T, strictly < 0) and derived populations.
struct EquilibriumState {
  double mu = 0.0;
  double n_total = 0.0;
  double n_ground = 0.0;
  std::vector<double> level_populations;  // (i+1) * occupancy(i*x), i = 0..i_max
};

/// Bose-Einstein occupancy 1/(exp(eps - mu) - 1), both arguments in k_B T.
/// Throws std::domain_error when mu >= eps.
double be_occupancy(double eps_reduced, double mu);

/// Expected total number: sum of (i+1) * be_occupancy(i*x, mu) up to i_max.
/// Strictly increasing in mu; throws std::domain_error for mu >= 0.
double total_number(const TrapSpectrum& spec, double mu);

/// d(total_number)/d(mu) = sum of (i+1) * f_i * (1 + f_i).
double total_number_derivative(const TrapSpectrum& spec, double mu);

/// Particle number at threshold, (pi^2/6) / x^2.
double critical_number(const TrapSpectrum& spec);

/// Inverts total_number for mu at fixed target number.
/// Bracketed bisection on u = -ln(-mu) followed by Newton refinement;
/// converges to |N(mu) - n_target| <= 1e-10 * n_target or throws
/// ConvergenceError.
EquilibriumState solve_mu(const TrapSpectrum& spec, double n_target);

struct CondensatePoint {
  double n_total;
  double n_ground;
  double mu;
};

/// Ground-state population along a grid of total numbers (threshold curve).
/// n_grid must be positive ascending; solver failures are rethrown with the
/// offending grid point identified.
std::vector<CondensatePoint> condensate_curve(const TrapSpectrum& spec,
                                              const std::vector<double>& n_grid);

}  // namespace photonbec
