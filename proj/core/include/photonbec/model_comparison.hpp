#pragma once

#include <vector>

namespace photonbec {

// Trap spacing used as the x -> infinity proxy once the matched spacing
// exceeds it; excited-level populations are then < ~2e-50 of the ground state.
inline constexpr double kSingleModeProxyX = 50.0;

/// A (beta, x) pair matched so that both models share the low-number slope:
/// lim_{n->0} n_ground/n_total = (1 - e^-x)^2 = beta, i.e. x = -ln(1 - sqrt(beta)).
struct MatchedPair {
  double beta;
  double x_matched;
  double low_population_slope;  // ground-state fraction limit at x_matched
};

/// Low-number ground-state fraction limit p0(x) = (1 - e^-x)^2.
double ground_fraction_limit(double x);

/// Solves p0(x) = beta. Throws std::domain_error for beta <= 0 and,
/// distinctly, for beta > 1; at beta = 1 the divergent x is capped at
/// kSingleModeProxyX (both models are then single-mode to ~1e-21).
MatchedPair match_x_to_beta(double beta);

struct ComparisonPoint {
  double control;        // shared axis: rho for the laser, n_total for the trap
  double p_laser;        // microlaser steady-state mode population
  double n_ground_bec;   // trap ground-state population at the matched spacing
  double rel_deviation;  // |P - n| / max(P, n, 1)
};

/// Both model curves on a shared control grid plus pointwise deviation.
std::vector<ComparisonPoint> comparison_curves(double beta,
                                               const std::vector<double>& control_grid);

/// Smallness parameters of the two models side by side. The thermally
/// available mode count is reported both as (k_B T / hbar w)^2 and to first
/// power, since either may be compared against 1/beta.
struct SmallnessReport {
  double beta;
  double x_matched;
  double inv_beta;
  double thermal_modes_quadratic;  // (1/x)^2
  double thermal_modes_linear;     // 1/x
  double ratio;                    // thermal_modes_quadratic / (1/beta)
};

SmallnessReport smallness_report(double beta);

}  // namespace photonbec
