#pragma once

#include <functional>

namespace photonbec {

/// Microcavity geometry and medium. The two length descriptions are tied by
/// lambda0 = 2 * n * L0 / q; either constructor fills in the other.
struct CavityGeometry {
  int q;                  // longitudinal mode index
  double n_refractive;    // intracavity refractive index
  double length_l0;       // on-axis cavity length, m
  double cutoff_lambda0;  // longest resonant (vacuum) wavelength, m
  double mirror_radius;   // mirror radius of curvature R, m
  double temperature;     // bath temperature, K

  static CavityGeometry from_cutoff(int q, double n, double lambda0_m, double radius_m,
                                    double temperature_k);
  static CavityGeometry from_length(int q, double n, double l0_m, double radius_m,
                                    double temperature_k);

  // Paraxial/harmonic mapping assumes R >> L0; flag raised below a factor 1e3.
  bool paraxial_valid() const { return mirror_radius >= 1e3 * length_l0; }
};

/// The photon as an effective massive particle:
///   E(r, p) = m c*^2 + p^2/(2m) + V(r),  m = h n^2/(c lambda0),  c* = c/n.
struct PhotonParticle {
  double mass;         // kg
  double cstar;        // intracavity light speed c/n, m/s
  double trap_omega;   // angular trap frequency, rad/s
  double rest_energy;  // m c*^2 = h c / lambda0, J

  static PhotonParticle from_geometry(const CavityGeometry& geom);
};

double effective_mass(const CavityGeometry& geom);  // h n^2/(c lambda0), kg

/// Harmonic trap frequency of a spherical mirror, omega = c* / sqrt(R * L0).
/// Follows from equating V(r) = m c*^2 r^2/(2 R L0) (sagitta expansion of the
/// mirror) with m omega^2 r^2 / 2.
double trap_frequency(const CavityGeometry& geom);  // rad/s

/// Reduced level spacing x = hbar * omega / (k_B T) consumed by the
/// equilibrium model.
double reduced_level_spacing(const CavityGeometry& geom);

/// Exact sagitta of a spherical mirror, R - sqrt(R^2 - r^2).
double spherical_sagitta(double mirror_radius, double r);

using RadialProfile = std::function<double(double)>;

/// Maps a cavity-length deviation profile to potential energy,
/// V(r) = -m c*^2 delta_l(r) / L0. delta_l is measured from the longest point
/// of the cavity (so delta_l <= 0 and V >= 0 for a trapping geometry); a
/// spherical mirror has delta_l(r) = -sagitta(r). Warns once on stderr when
/// |delta_l|/L0 > 0.1, where the perturbative mapping is invalid.
RadialProfile potential_from_length_profile(const CavityGeometry& geom, RadialProfile delta_l);

/// Eq-of-motion energy of the effective particle: rest + kinetic + potential.
/// Warns on stderr when p/(m c*) > 0.3 (paraxial expansion degraded).
double dispersion_energy(const PhotonParticle& particle, double p, double r,
                         const RadialProfile& potential);

}  // namespace photonbec
