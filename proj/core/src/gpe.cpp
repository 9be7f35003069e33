#include "photonbec/gpe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fft_backend.hpp"
#include "photonbec/constants.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

namespace {

// FFT-ordered wavenumbers for one axis.
std::vector<double> wavenumbers(int n, double d) {
  std::vector<double> k(n);
  const double dk = 2.0 * constants::pi / (n * d);
  for (int i = 0; i < n; ++i) k[i] = dk * (i < n / 2 ? i : i - n);
  return k;
}

std::vector<double> k_squared_grid(const ComplexField2D& f) {
  const auto kx = wavenumbers(f.nx, f.dx);
  const auto ky = wavenumbers(f.ny, f.dy);
  std::vector<double> k2(static_cast<std::size_t>(f.nx) * f.ny);
  for (int iy = 0; iy < f.ny; ++iy)
    for (int ix = 0; ix < f.nx; ++ix)
      k2[static_cast<std::size_t>(iy) * f.nx + ix] = kx[ix] * kx[ix] + ky[iy] * ky[iy];
  return k2;
}

std::vector<double> sample_potential(const ComplexField2D& f, const GpeParams& p) {
  std::vector<double> v(static_cast<std::size_t>(f.nx) * f.ny, 0.0);
  if (p.potential)
    for (int iy = 0; iy < f.ny; ++iy)
      for (int ix = 0; ix < f.nx; ++ix)
        v[static_cast<std::size_t>(iy) * f.nx + ix] = p.potential(f.x_coord(ix), f.y_coord(iy));
  return v;
}

// cos^2 ramp from 0 at the boundary to 1 a distance `width` inside
std::vector<double> absorber_mask(const ComplexField2D& f, double width) {
  auto ramp = [width](double dist) {
    if (dist >= width) return 1.0;
    const double s = std::sin(0.5 * constants::pi * dist / width);
    return s * s;
  };
  const double x_lo = f.x_coord(0), x_hi = f.x_coord(f.nx - 1);
  const double y_lo = f.y_coord(0), y_hi = f.y_coord(f.ny - 1);
  std::vector<double> m(static_cast<std::size_t>(f.nx) * f.ny);
  for (int iy = 0; iy < f.ny; ++iy)
    for (int ix = 0; ix < f.nx; ++ix) {
      const double dxe = std::min(f.x_coord(ix) - x_lo, x_hi - f.x_coord(ix));
      const double dye = std::min(f.y_coord(iy) - y_lo, y_hi - f.y_coord(iy));
      m[static_cast<std::size_t>(iy) * f.nx + ix] = ramp(dxe) * ramp(dye);
    }
  return m;
}

// Exact solution of the local position-space operator over one step:
// phase from V and g (with the density integral of the logistic gain law)
// and a real amplitude factor. Exactness here keeps the Strang splitting
// second order in driven runs.
void position_step(std::vector<std::complex<double>>& psi, const std::vector<double>& v,
                   const GpeParams& p, double dt) {
  const double hbar = p.hbar, g = p.g_interaction, gam = p.gamma_net, sat = p.gamma_sat;
  const double growth = std::exp(2.0 * gam * dt);
  const double r = (gam == 0.0) ? 2.0 * dt : std::expm1(2.0 * gam * dt) / gam;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double n0 = std::norm(psi[i]);
    const double denom = 1.0 + sat * n0 * r;
    // time integral of the local density over the substep
    const double n_int = (sat == 0.0) ? 0.5 * n0 * r : std::log1p(sat * n0 * r) / (2.0 * sat);
    const double amp = std::sqrt(growth / denom);
    const double phase = -(v[i] * dt + g * n_int) / hbar;
    psi[i] *= std::polar(amp, phase);
  }
}

void kinetic_step(std::vector<std::complex<double>>& psi,
                  const std::vector<std::complex<double>>& phase, const detail::Fft2D& fft) {
  fft.forward(psi.data());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] *= phase[i];
  fft.inverse(psi.data());
}

GpeObservables observables_impl(const ComplexField2D& field, const std::vector<double>& v,
                                const std::vector<double>& k2, const detail::Fft2D& fft,
                                const GpeParams& p, double time) {
  GpeObservables o;
  o.time = time;
  const double da = field.cell_area();
  double pot = 0.0, inter = 0.0, norm = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    const double n = std::norm(field.values[i]);
    norm += n;
    pot += v[i] * n;
    inter += n * n;
    if (n > peak) peak = n;
  }
  o.norm = norm * da;
  o.potential = pot * da;
  o.interaction = 0.5 * p.g_interaction * inter * da;
  o.peak_density = peak;

  std::vector<std::complex<double>> spec = field.values;
  fft.forward(spec.data());
  double kin = 0.0;
  const double kfac = p.hbar * p.hbar / (2.0 * p.mass);
  for (std::size_t i = 0; i < spec.size(); ++i) kin += kfac * k2[i] * std::norm(spec[i]);
  o.kinetic = kin * da / (static_cast<double>(field.nx) * field.ny);
  o.total = o.kinetic + o.potential + o.interaction;
  return o;
}

void check_field(const ComplexField2D& f) {
  if (f.nx <= 0 || f.ny <= 0 || f.values.size() != static_cast<std::size_t>(f.nx) * f.ny)
    throw std::domain_error("gpe: field grid is empty or inconsistent");
}

}  // namespace

GpeObservables observables(const ComplexField2D& field, const GpeParams& params, double time) {
  check_field(field);
  const detail::Fft2D fft(field.nx, field.ny);
  return observables_impl(field, sample_potential(field, params), k_squared_grid(field), fft,
                          params, time);
}

double stable_dt(const ComplexField2D& field, const GpeParams& params) {
  check_field(field);
  const double kx_max = constants::pi / field.dx, ky_max = constants::pi / field.dy;
  const double e_kin = params.hbar * params.hbar * (kx_max * kx_max + ky_max * ky_max) /
                       (2.0 * params.mass);
  double e_pot = 0.0;
  const auto v = sample_potential(field, params);
  for (double vi : v) e_pot = std::max(e_pot, std::abs(vi));
  const double e_int = std::abs(params.g_interaction) * field.peak_density();
  const double e_max = std::max({e_kin, e_pot, e_int});
  return 0.01 * params.hbar / e_max;
}

EvolveResult evolve(ComplexField2D field, const GpeParams& params) {
  check_field(field);
  if (!(params.mass > 0.0) || !(params.hbar > 0.0))
    throw std::domain_error("evolve: mass and hbar must be positive");
  if (!(params.t_end > 0.0)) throw std::domain_error("evolve: t_end must be positive");

  const double dt = params.dt > 0.0 ? params.dt : stable_dt(field, params);
  const long n_steps = std::max<long>(1, std::lround(params.t_end / dt));

  const detail::Fft2D fft(field.nx, field.ny);
  const auto k2 = k_squared_grid(field);
  const auto v = sample_potential(field, params);
  const auto mask = params.absorber_width > 0.0
                        ? absorber_mask(field, params.absorber_width)
                        : std::vector<double>();

  std::vector<std::complex<double>> kin_half(k2.size());
  const double kfac = params.hbar / (2.0 * params.mass);  // phase rate hbar k^2 / 2m
  for (std::size_t i = 0; i < k2.size(); ++i)
    kin_half[i] = std::polar(1.0, -kfac * k2[i] * 0.5 * dt);

  EvolveResult result;
  result.series.push_back(observables_impl(field, v, k2, fft, params, 0.0));
  const double norm0 = result.series.front().norm;

  const int cadence = params.sample_every > 0 ? params.sample_every : 0;
  for (long step = 1; step <= n_steps; ++step) {
    kinetic_step(field.values, kin_half, fft);
    position_step(field.values, v, params, dt);
    kinetic_step(field.values, kin_half, fft);
    if (!mask.empty())
      for (std::size_t i = 0; i < mask.size(); ++i) field.values[i] *= mask[i];

    const bool sample = (cadence > 0 && step % cadence == 0) || step == n_steps;
    if (sample) {
      const auto obs = observables_impl(field, v, k2, fft, params, step * dt);
      if (params.conservative() && norm0 > 0.0 && obs.norm > 1e6 * norm0) {
        std::ostringstream msg;
        msg << "evolve: instability detected in conservative mode at t=" << obs.time
            << " (norm grew " << obs.norm / norm0 << "x)";
        throw std::runtime_error(msg.str());
      }
      result.series.push_back(obs);
    }
  }
  result.field = std::move(field);
  return result;
}

ComplexField2D ground_state(const GpeParams& params, ComplexField2D initial,
                            double norm_target) {
  check_field(initial);
  if (!params.conservative())
    throw std::domain_error("ground_state: requires conservative parameters "
                            "(gamma_net = gamma_sat = 0)");
  if (!(norm_target > 0.0))
    throw std::domain_error("ground_state: norm_target must be positive");

  const detail::Fft2D fft(initial.nx, initial.ny);
  const auto k2 = k_squared_grid(initial);
  const auto v = sample_potential(initial, params);
  const double da = initial.cell_area();

  bool all_zero = true;
  for (const auto& c : initial.values)
    if (c != std::complex<double>(0.0, 0.0)) {
      all_zero = false;
      break;
    }
  if (all_zero) std::fill(initial.values.begin(), initial.values.end(), 1.0);

  auto renormalize = [&] {
    double s = 0.0;
    for (const auto& c : initial.values) s += std::norm(c);
    const double scale = std::sqrt(norm_target / (s * da));
    for (auto& c : initial.values) c *= scale;
  };
  renormalize();

  // One imaginary-time Strang step: exp(-H dtau / hbar) split kinetic/potential.
  std::vector<double> kin_half(k2.size());
  auto imag_step = [&](double dtau) {
    fft.forward(initial.values.data());
    for (std::size_t i = 0; i < k2.size(); ++i) initial.values[i] *= kin_half[i];
    fft.inverse(initial.values.data());
    const double g = params.g_interaction;
    for (std::size_t i = 0; i < initial.values.size(); ++i) {
      const double n = std::norm(initial.values[i]);
      initial.values[i] *= std::exp(-(v[i] + g * n) * dtau / params.hbar);
    }
    fft.forward(initial.values.data());
    for (std::size_t i = 0; i < k2.size(); ++i) initial.values[i] *= kin_half[i];
    fft.inverse(initial.values.data());
    renormalize();
  };

  auto energy = [&] {
    return observables_impl(initial, v, k2, fft, params, 0.0).total;
  };

  // Step annealing: each stage relaxes at a fixed dtau until the energy is
  // stationary, then the step shrinks to reduce the O(dtau^2) splitting bias.
  // Annealing stops once a stage no longer moves the converged energy.
  static constexpr double kStageFactors[] = {0.5, 0.1, 0.02, 0.004, 0.0008};
  constexpr int kMaxItersPerStage = 40000;
  constexpr double kStageTol = 1e-13;

  long total_iters = 0;
  double stage_energy_prev = std::numeric_limits<double>::infinity();
  for (double factor : kStageFactors) {
    const double e_scale = std::max(std::abs(energy()) / norm_target, 1e-300);
    const double dtau = factor * params.hbar / e_scale;
    for (std::size_t i = 0; i < k2.size(); ++i)
      kin_half[i] = std::exp(-params.hbar * k2[i] / (2.0 * params.mass) * 0.5 * dtau);

    double e_old = std::numeric_limits<double>::infinity();
    bool stage_done = false;
    for (int it = 0; it < kMaxItersPerStage && !stage_done; ++it) {
      imag_step(dtau);
      ++total_iters;
      if (it % 5 == 4) {
        const double e = energy();
        stage_done = std::abs(e - e_old) <= kStageTol * std::abs(e);
        e_old = e;
      }
    }
    if (!stage_done)
      throw ConvergenceError("ground_state: no convergence after " +
                             std::to_string(total_iters) + " iterations");
    if (std::abs(e_old - stage_energy_prev) <= 5.0 * kStageTol * std::abs(e_old)) break;
    stage_energy_prev = e_old;
  }
  return initial;
}

}  // namespace photonbec
