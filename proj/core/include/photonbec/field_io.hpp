#pragma once

#include <filesystem>

#include "photonbec/complex_field.hpp"

namespace photonbec {

/// Snapshot as CSV with columns x,y,re_psi,im_psi (row-major order).
void write_field_csv(const std::filesystem::path& path, const ComplexField2D& field);

/// Density |psi|^2 as a binary 8-bit PGM, scaled so the peak maps to 255.
void write_density_pgm(const std::filesystem::path& path, const ComplexField2D& field);

}  // namespace photonbec
