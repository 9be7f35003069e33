#include "photonbec/field_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "photonbec/csv.hpp"

namespace photonbec {

void write_field_csv(const std::filesystem::path& path, const ComplexField2D& field) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_field_csv: cannot open '" + path.string() + "'");
  csv::Writer writer(os, {"x", "y", "re_psi", "im_psi"});
  for (int iy = 0; iy < field.ny; ++iy)
    for (int ix = 0; ix < field.nx; ++ix) {
      const auto& v = field.at(ix, iy);
      const double row[4] = {field.x_coord(ix), field.y_coord(iy), v.real(), v.imag()};
      writer.write_row(row);
    }
}

void write_density_pgm(const std::filesystem::path& path, const ComplexField2D& field) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_density_pgm: cannot open '" + path.string() + "'");
  const double peak = field.peak_density();
  const double scale = peak > 0.0 ? 255.0 / peak : 0.0;
  os << "P5\n" << field.nx << ' ' << field.ny << "\n255\n";
  for (int iy = 0; iy < field.ny; ++iy)
    for (int ix = 0; ix < field.nx; ++ix) {
      const double d = std::norm(field.at(ix, iy)) * scale;
      os.put(static_cast<char>(static_cast<unsigned char>(std::lround(d))));
    }
}

}  // namespace photonbec
