#include "photonbec/model_comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "photonbec/bose_equilibrium.hpp"
#include "photonbec/microlaser.hpp"

namespace photonbec {

double ground_fraction_limit(double x) {
  if (!(x > 0.0)) throw std::domain_error("ground_fraction_limit: x must be positive");
  const double y = -std::expm1(-x);  // 1 - e^-x without cancellation
  return y * y;
}

MatchedPair match_x_to_beta(double beta) {
  if (!(beta > 0.0))
    throw std::domain_error("match_x_to_beta: beta must be positive");
  if (beta > 1.0)
    throw std::domain_error("match_x_to_beta: beta exceeds 1 (no cavity emits more than all "
                            "of its spontaneous light into one mode)");
  // delta = 1 - sqrt(beta), computed as (1 - beta)/(1 + sqrt(beta)) to keep
  // precision near beta = 1.
  const double delta = (1.0 - beta) / (1.0 + std::sqrt(beta));
  double x = (delta > 0.0) ? -std::log(delta) : std::numeric_limits<double>::infinity();
  if (!(x < kSingleModeProxyX)) x = kSingleModeProxyX;
  return MatchedPair{beta, x, ground_fraction_limit(x)};
}

std::vector<ComparisonPoint> comparison_curves(double beta,
                                               const std::vector<double>& control_grid) {
  for (std::size_t j = 0; j < control_grid.size(); ++j) {
    if (!(control_grid[j] > 0.0))
      throw std::domain_error("comparison_curves: control grid must be strictly positive");
    if (j > 0 && !(control_grid[j] > control_grid[j - 1]))
      throw std::domain_error("comparison_curves: control grid must be sorted ascending");
  }
  const MatchedPair pair = match_x_to_beta(beta);
  const TrapSpectrum spec = TrapSpectrum::with_default_truncation(pair.x_matched);

  std::vector<ComparisonPoint> out;
  out.reserve(control_grid.size());
  for (std::size_t j = 0; j < control_grid.size(); ++j) {
    const double c = control_grid[j];
    try {
      const double p = steady_state_photons(beta, c);
      const double n = solve_mu(spec, c).n_ground;
      const double dev = std::abs(p - n) / std::max({p, n, 1.0});
      out.push_back({c, p, n, dev});
    } catch (const std::exception& e) {
      throw std::runtime_error("comparison_curves: grid point " + std::to_string(j) +
                               " (control=" + std::to_string(c) + ") failed: " + e.what());
    }
  }
  return out;
}

SmallnessReport smallness_report(double beta) {
  const MatchedPair pair = match_x_to_beta(beta);
  SmallnessReport r;
  r.beta = beta;
  r.x_matched = pair.x_matched;
  r.inv_beta = 1.0 / beta;
  r.thermal_modes_linear = 1.0 / pair.x_matched;
  r.thermal_modes_quadratic = r.thermal_modes_linear * r.thermal_modes_linear;
  r.ratio = r.thermal_modes_quadratic * beta;
  return r;
}

}  // namespace photonbec
