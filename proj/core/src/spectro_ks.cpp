#include "photonbec/spectro_ks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "photonbec/constants.hpp"
#include "photonbec/csv.hpp"
#include "photonbec/errors.hpp"

namespace photonbec {

std::size_t SpectrumPair::included_count() const {
  return static_cast<std::size_t>(std::count(included.begin(), included.end(), true));
}

SpectrumPair validate_spectra(SpectrumPair pair) {
  const std::size_t n = pair.wavelengths_nm.size();
  if (pair.absorption.size() != n || pair.fluorescence.size() != n)
    throw FormatError("spectra: columns have unequal lengths", 0);
  if (n == 0) throw FormatError("spectra: no data rows", 0);
  if (!(pair.floor > 0.0) || !(pair.floor < 1.0))
    throw std::domain_error("spectra: inclusion floor must lie in (0, 1)");

  for (std::size_t i = 1; i < n; ++i)
    if (!(pair.wavelengths_nm[i] > pair.wavelengths_nm[i - 1]))
      // +2: 1-based and one header line, matching load_spectra's count
      throw FormatError("spectra: wavelengths not strictly ascending at row " +
                            std::to_string(i + 1),
                        static_cast<long>(i) + 2);

  double peak_a = 0.0, peak_f = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (pair.absorption[i] < 0.0 || pair.fluorescence[i] < 0.0)
      throw FormatError("spectra: negative intensity at row " + std::to_string(i + 1),
                        static_cast<long>(i) + 2);
    peak_a = std::max(peak_a, pair.absorption[i]);
    peak_f = std::max(peak_f, pair.fluorescence[i]);
  }
  if (peak_a == 0.0 || peak_f == 0.0)
    throw FormatError("spectra: no fittable points (an all-zero column)", 0);
  if (std::abs(peak_a - 1.0) > 1e-6 || std::abs(peak_f - 1.0) > 1e-6)
    throw FormatError("spectra: spectra must be normalized to unit peak (got peaks " +
                          csv::format_double(peak_a) + ", " + csv::format_double(peak_f) + ")",
                      0);

  pair.included.assign(n, false);
  for (std::size_t i = 0; i < n; ++i)
    pair.included[i] = pair.absorption[i] >= pair.floor && pair.fluorescence[i] >= pair.floor;
  return pair;
}

SpectrumPair load_spectra(const std::filesystem::path& path, double floor) {
  const csv::Table table = csv::read_numeric(path);
  if (table.header != std::vector<std::string>{"wavelength_nm", "absorption", "fluorescence"})
    throw FormatError(path.string() +
                          ": expected header 'wavelength_nm,absorption,fluorescence'",
                      1);
  SpectrumPair pair;
  pair.floor = floor;
  pair.wavelengths_nm.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    pair.wavelengths_nm.push_back(row[0]);
    pair.absorption.push_back(row[1]);
    pair.fluorescence.push_back(row[2]);
  }
  return validate_spectra(std::move(pair));
}

std::vector<KsPoint> ks_log_ratio(const SpectrumPair& pair) {
  if (pair.included.size() != pair.size())
    throw std::domain_error("ks_log_ratio: pair not validated (missing inclusion mask)");
  std::vector<KsPoint> points;
  points.reserve(pair.size());
  for (std::size_t i = 0; i < pair.size(); ++i) {
    if (!pair.included[i]) continue;
    const double a = pair.absorption[i], f = pair.fluorescence[i];
    points.push_back({constants::hc_ev_nm / pair.wavelengths_nm[i], std::log(a / f),
                      std::min(a, f)});
  }
  return points;
}

KsFit fit_ks(const SpectrumPair& pair, bool dos_correction) {
  auto points = ks_log_ratio(pair);
  if (points.size() < 10)
    throw std::domain_error("fit_ks: need at least 10 points above the floor, have " +
                            std::to_string(points.size()));

  if (dos_correction) {
    // reference the correction to the fluorescence peak so the fitted line
    // keeps an interpretable root
    std::size_t i_peak = 0;
    for (std::size_t i = 0; i < pair.size(); ++i)
      if (pair.fluorescence[i] > pair.fluorescence[i_peak]) i_peak = i;
    const double eps_ref = constants::hc_ev_nm / pair.wavelengths_nm[i_peak];
    for (auto& p : points) p.log_ratio += 3.0 * std::log(p.energy_ev / eps_ref);
  }

  double sw = 0.0, swx = 0.0, swy = 0.0, swxx = 0.0, swxy = 0.0;
  for (const auto& p : points) {
    sw += p.weight;
    swx += p.weight * p.energy_ev;
    swy += p.weight * p.log_ratio;
    swxx += p.weight * p.energy_ev * p.energy_ev;
    swxy += p.weight * p.energy_ev * p.log_ratio;
  }
  const double det = sw * swxx - swx * swx;
  if (!(det > 0.0)) throw ConvergenceError("fit_ks: degenerate energy axis");
  const double slope = (sw * swxy - swx * swy) / det;
  const double intercept = (swxx * swy - swx * swxy) / det;

  if (!(slope > 0.0))
    throw std::domain_error("fit_ks: non-physical negative slope; absorption and fluorescence "
                            "are likely swapped");

  double ss_res = 0.0, ss_tot = 0.0;
  const double y_mean = swy / sw;
  for (const auto& p : points) {
    const double fit = slope * p.energy_ev + intercept;
    ss_res += p.weight * (p.log_ratio - fit) * (p.log_ratio - fit);
    ss_tot += p.weight * (p.log_ratio - y_mean) * (p.log_ratio - y_mean);
  }
  const double r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;

  KsFit fit;
  fit.slope_per_ev = slope;
  fit.intercept = intercept;
  fit.temperature_k = 1.0 / (constants::kb_ev_per_k * slope);
  fit.zpl_energy_ev = -intercept / slope;
  fit.zpl_wavelength_nm = constants::hc_ev_nm / fit.zpl_energy_ev;
  fit.r_squared = r2;
  fit.points_used = static_cast<int>(points.size());
  fit.dos_corrected = dos_correction;

  double lmin = 0.0, lmax = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i)
    if (pair.included[i]) {
      if (lmin == 0.0) lmin = pair.wavelengths_nm[i];
      lmax = pair.wavelengths_nm[i];
    }
  fit.lambda_min_nm = lmin;
  fit.lambda_max_nm = lmax;

  if (fit.r_squared < 0.9) {
    std::ostringstream msg;
    msg << "fit_ks: relation not satisfied (r^2 = " << fit.r_squared << " < 0.9)";
    throw FitQualityError(msg.str());
  }
  return fit;
}

}  // namespace photonbec
