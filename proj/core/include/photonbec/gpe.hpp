#pragma once

#include <functional>
#include <vector>

#include "photonbec/complex_field.hpp"

namespace photonbec {

/// Parameters of the dissipative Gross-Pitaevskii / Lugiato-Lefever equation
///
///   d psi/dt = -(i/hbar) [V - (hbar^2/2m) lap + g |psi|^2] psi
///              + (gamma_net - gamma_sat |psi|^2) psi
///
/// gamma_net and gamma_sat are rates (the energy-like bracket entries are
/// these rates times hbar); the rest-mass energy is gauged out as a global
/// phase. Units are the caller's business as long as they are consistent;
/// tests and the CLI default to hbar = m = 1.
struct GpeParams {
  double mass = 1.0;
  double hbar = 1.0;
  std::function<double(double, double)> potential;  // V(x, y); empty means 0
  double g_interaction = 0.0;                       // energy * area
  double gamma_net = 0.0;                           // net gain rate, may be negative
  double gamma_sat = 0.0;                           // saturation, rate * area
  double dt = 0.0;                                  // <= 0 selects stable_dt
  double t_end = 0.0;
  int sample_every = 10;        // observable sampling cadence, in steps
  double absorber_width = 0.0;  // smooth absorbing buffer at the grid edge, 0 = off

  bool conservative() const { return gamma_net == 0.0 && gamma_sat == 0.0; }
};

struct GpeObservables {
  double time = 0.0;
  double norm = 0.0;         // integral |psi|^2 dA
  double kinetic = 0.0;      // spectral
  double potential = 0.0;
  double interaction = 0.0;  // (g/2) integral |psi|^4 dA
  double total = 0.0;
  double peak_density = 0.0;
};

struct EvolveResult {
  ComplexField2D field;
  std::vector<GpeObservables> series;
};

/// Energies and norm of a field (kinetic term evaluated in wavenumber space).
GpeObservables observables(const ComplexField2D& field, const GpeParams& params,
                           double time = 0.0);

/// Conservative default step: 0.01 * hbar / E_max, with E_max the larger of
/// the grid's maximum kinetic energy and the potential scale on the grid.
double stable_dt(const ComplexField2D& field, const GpeParams& params);

/// Strang split-step evolution: half kinetic step in wavenumber space, full
/// position-space step (potential + interaction phase and the exact local
/// gain-saturation solution), half kinetic step. Samples observables every
/// sample_every steps. Conservative runs abort with a diagnostic if the norm
/// grows by more than 1e6x (spectral instability guard).
EvolveResult evolve(ComplexField2D field, const GpeParams& params);

/// Imaginary-time relaxation to the conservative ground state at fixed norm.
/// params must be conservative; `initial` provides the grid and starting
/// guess (an all-zero field starts from a uniform one). The step is annealed
/// until the energy is stationary to ~1e-13 relative per check, which leaves
/// the per-iteration energy change below 1e-12 relative.
ComplexField2D ground_state(const GpeParams& params, ComplexField2D initial,
                            double norm_target);

}  // namespace photonbec
