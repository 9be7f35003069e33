#pragma once

#include <filesystem>
#include <vector>

namespace photonbec {

/// Absorption/fluorescence spectra on a shared wavelength axis, each
/// normalized to unit peak. `included` marks the rows where both spectra
/// exceed the fitting floor.
struct SpectrumPair {
  std::vector<double> wavelengths_nm;  // strictly ascending
  std::vector<double> absorption;      // peak-normalized, [0, 1]
  std::vector<double> fluorescence;    // peak-normalized, [0, 1]
  std::vector<bool> included;
  double floor = 1e-3;

  std::size_t size() const { return wavelengths_nm.size(); }
  std::size_t included_count() const;
};

/// Loads a CSV with header `wavelength_nm,absorption,fluorescence`.
/// Throws FormatError (with line number) for parse problems, descending
/// wavelengths, an all-zero column ("no fittable points") or spectra whose
/// peak deviates from 1 by more than 1e-6.
SpectrumPair load_spectra(const std::filesystem::path& path, double floor = 1e-3);

/// Builds the inclusion mask and validates an in-memory pair (same checks
/// as load_spectra, minus the file parsing).
SpectrumPair validate_spectra(SpectrumPair pair);

struct KsPoint {
  double energy_ev;
  double log_ratio;  // ln(A/F)
  double weight;     // min(A, F): the log-ratio variance blows up where either is weak
};

/// Detailed-balance log-ratio per included point, energy axis in eV.
std::vector<KsPoint> ks_log_ratio(const SpectrumPair& pair);

struct KsFit {
  double temperature_k = 0.0;
  double zpl_energy_ev = 0.0;     // root of the fitted line
  double zpl_wavelength_nm = 0.0;
  double r_squared = 0.0;
  double slope_per_ev = 0.0;      // = 1 / (k_B T)
  double intercept = 0.0;
  double lambda_min_nm = 0.0, lambda_max_nm = 0.0;  // wavelength range used
  int points_used = 0;
  bool dos_corrected = false;
};

/// Weighted least-squares line through (energy, ln(A/F)); temperature from
/// the slope, ZPL from the root. Requires >= 10 included points; throws
/// FitQualityError when r^2 < 0.9 and std::domain_error for a non-physical
/// negative slope (swapped spectra).
///
/// dos_correction subtracts the cubic photon density-of-states factor from
/// the ratio before fitting (3*ln(eps/eps_peak_F) added to the log-ratio).
/// The plain relation omits this factor; the flag goes beyond it.
KsFit fit_ks(const SpectrumPair& pair, bool dos_correction = false);

}  // namespace photonbec
