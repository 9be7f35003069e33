#include "fft_backend.hpp"

#include <fftw3.h>

#include <mutex>

namespace photonbec::detail {

namespace {
std::mutex planner_mutex;  // the FFTW planner is not thread-safe
}

Fft2D::Fft2D(int nx, int ny) : nx_(nx), ny_(ny) {
  std::lock_guard<std::mutex> lock(planner_mutex);
  scratch_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * static_cast<std::size_t>(nx) * ny));
  auto* s = reinterpret_cast<fftw_complex*>(scratch_);
  // row-major [iy][ix] -> FFTW dims (ny, nx). FFTW_UNALIGNED so the plans can
  // be executed on std::vector storage of any alignment.
  plan_fwd_ = fftw_plan_dft_2d(ny_, nx_, s, s, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft_2d(ny_, nx_, s, s, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft2D::~Fft2D() {
  std::lock_guard<std::mutex> lock(planner_mutex);
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(scratch_);
}

void Fft2D::forward(std::complex<double>* data) const {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), d, d);
}

void Fft2D::inverse(std::complex<double>* data) const {
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), d, d);
  const double scale = 1.0 / (static_cast<double>(nx_) * ny_);
  const std::size_t count = static_cast<std::size_t>(nx_) * ny_;
  for (std::size_t i = 0; i < count; ++i) data[i] *= scale;
}

}  // namespace photonbec::detail
