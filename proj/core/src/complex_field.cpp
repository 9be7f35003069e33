#include "photonbec/complex_field.hpp"

#include <stdexcept>

namespace photonbec {

namespace {
bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

ComplexField2D ComplexField2D::zeros(int nx, int ny, double dx, double dy) {
  if (!is_power_of_two(nx) || !is_power_of_two(ny))
    throw std::domain_error("ComplexField2D: nx and ny must be powers of two");
  if (!(dx > 0.0) || !(dy > 0.0))
    throw std::domain_error("ComplexField2D: grid spacings must be positive");
  ComplexField2D f;
  f.nx = nx;
  f.ny = ny;
  f.dx = dx;
  f.dy = dy;
  f.values.assign(static_cast<std::size_t>(nx) * ny, {0.0, 0.0});
  return f;
}

double ComplexField2D::norm() const {
  double sum = 0.0;
  for (const auto& v : values) sum += std::norm(v);
  return sum * cell_area();
}

double ComplexField2D::peak_density() const {
  double peak = 0.0;
  for (const auto& v : values) {
    const double d = std::norm(v);
    if (d > peak) peak = d;
  }
  return peak;
}

}  // namespace photonbec
