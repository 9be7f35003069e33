#pragma once

#include <complex>
#include <vector>

namespace photonbec {

/// Order parameter psi on a uniform 2D grid, row-major [iy * nx + ix].
/// |psi|^2 is areal density; grid sides must be powers of two (spectral
/// transform constraint).
struct ComplexField2D {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  std::vector<std::complex<double>> values;

  static ComplexField2D zeros(int nx, int ny, double dx, double dy);

  std::complex<double>& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * nx + ix]; }
  const std::complex<double>& at(int ix, int iy) const {
    return values[static_cast<std::size_t>(iy) * nx + ix];
  }

  // grid coordinates centered on the domain
  double x_coord(int ix) const { return (ix - nx / 2) * dx; }
  double y_coord(int iy) const { return (iy - ny / 2) * dy; }

  double cell_area() const { return dx * dy; }
  double norm() const;          // integral of |psi|^2 dA
  double peak_density() const;  // max |psi|^2
};

}  // namespace photonbec
