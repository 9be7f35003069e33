#pragma once

#include <complex>

namespace photonbec::detail {

// Thin FFTW3 wrapper for in-place 2D complex transforms. Plans are created
// once per grid size (FFTW_ESTIMATE, deterministic) and executed on caller
// buffers via the new-array interface. Planner access is serialized; execution
// from different Fft2D instances is safe concurrently.
class Fft2D {
 public:
  Fft2D(int nx, int ny);
  ~Fft2D();
  Fft2D(const Fft2D&) = delete;
  Fft2D& operator=(const Fft2D&) = delete;

  void forward(std::complex<double>* data) const;  // unnormalized
  void inverse(std::complex<double>* data) const;  // normalized by 1/(nx*ny)

 private:
  int nx_, ny_;
  void* plan_fwd_;
  void* plan_bwd_;
  std::complex<double>* scratch_;
};

}  // namespace photonbec::detail
