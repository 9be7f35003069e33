#include "photonbec/cavity_photon.hpp"

#include <cmath>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "photonbec/constants.hpp"

namespace photonbec {

namespace {

void check_common(int q, double n, double radius_m, double temperature_k) {
  if (q < 1) throw std::domain_error("CavityGeometry: q must be a positive integer");
  if (!(n >= 1.0)) throw std::domain_error("CavityGeometry: refractive index must be >= 1");
  if (!(radius_m > 0.0))
    throw std::domain_error("CavityGeometry: mirror radius must be positive (convex)");
  if (!(temperature_k > 0.0))
    throw std::domain_error("CavityGeometry: temperature must be positive");
}

}  // namespace

CavityGeometry CavityGeometry::from_cutoff(int q, double n, double lambda0_m, double radius_m,
                                           double temperature_k) {
  check_common(q, n, radius_m, temperature_k);
  if (!(lambda0_m > 0.0)) throw std::domain_error("CavityGeometry: lambda0 must be positive");
  const double l0 = static_cast<double>(q) * lambda0_m / (2.0 * n);
  return CavityGeometry{q, n, l0, lambda0_m, radius_m, temperature_k};
}

CavityGeometry CavityGeometry::from_length(int q, double n, double l0_m, double radius_m,
                                           double temperature_k) {
  check_common(q, n, radius_m, temperature_k);
  if (!(l0_m > 0.0)) throw std::domain_error("CavityGeometry: L0 must be positive");
  const double lambda0 = 2.0 * n * l0_m / static_cast<double>(q);
  return CavityGeometry{q, n, l0_m, lambda0, radius_m, temperature_k};
}

double effective_mass(const CavityGeometry& geom) {
  return constants::planck_h * geom.n_refractive * geom.n_refractive /
         (constants::speed_of_light * geom.cutoff_lambda0);
}

double trap_frequency(const CavityGeometry& geom) {
  const double cstar = constants::speed_of_light / geom.n_refractive;
  return cstar / std::sqrt(geom.mirror_radius * geom.length_l0);
}

double reduced_level_spacing(const CavityGeometry& geom) {
  return constants::hbar * trap_frequency(geom) / (constants::boltzmann_kb * geom.temperature);
}

double spherical_sagitta(double mirror_radius, double r) {
  if (!(mirror_radius > 0.0))
    throw std::domain_error("spherical_sagitta: mirror radius must be positive");
  if (std::abs(r) >= mirror_radius)
    throw std::domain_error("spherical_sagitta: |r| must be smaller than the mirror radius");
  // R - sqrt(R^2 - r^2), rearranged to avoid cancellation for r << R
  return r * r / (mirror_radius + std::sqrt((mirror_radius - r) * (mirror_radius + r)));
}

PhotonParticle PhotonParticle::from_geometry(const CavityGeometry& geom) {
  PhotonParticle p;
  p.mass = effective_mass(geom);
  p.cstar = constants::speed_of_light / geom.n_refractive;
  p.trap_omega = trap_frequency(geom);
  p.rest_energy = p.mass * p.cstar * p.cstar;
  return p;
}

RadialProfile potential_from_length_profile(const CavityGeometry& geom, RadialProfile delta_l) {
  if (!delta_l)
    throw std::domain_error("potential_from_length_profile: delta_l must be callable");
  const double scale = effective_mass(geom) * constants::speed_of_light *
                       constants::speed_of_light /
                       (geom.n_refractive * geom.n_refractive * geom.length_l0);
  const double l0 = geom.length_l0;
  auto warned = std::make_shared<bool>(false);
  return [scale, l0, warned, delta_l = std::move(delta_l)](double r) {
    const double dl = delta_l(r);
    if (std::abs(dl) > 0.1 * l0 && !*warned) {
      std::cerr << "[W] potential_from_length_profile: |delta L|/L0 > 0.1 at r=" << r
                << "; perturbative mapping invalid there\n";
      *warned = true;
    }
    return -scale * dl;  // shorter cavity (delta_l < 0) -> higher energy
  };
}

double dispersion_energy(const PhotonParticle& particle, double p, double r,
                         const RadialProfile& potential) {
  if (!(particle.mass > 0.0))
    throw std::domain_error("dispersion_energy: particle mass must be positive");
  if (p / (particle.mass * particle.cstar) > 0.3)
    std::cerr << "[W] dispersion_energy: p/(m c*) = " << p / (particle.mass * particle.cstar)
              << " > 0.3; paraxial expansion degraded\n";
  const double v = potential ? potential(r) : 0.0;
  return particle.rest_energy + p * p / (2.0 * particle.mass) + v;
}

}  // namespace photonbec
