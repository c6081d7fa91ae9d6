#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace latqmc {

/// Discrete Fourier transform of a fixed length (FFTW, any length).
/// A plan owns its work buffer; use one plan per thread.
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;

  std::size_t size() const { return n_; }

  /// X_k = sum_j x_j e^{-2 pi i j k / n}, in place.
  void forward(std::vector<std::complex<double>>& x) const;
  /// x_j = (1/n) sum_k X_k e^{2 pi i j k / n}, in place.
  void inverse(std::vector<std::complex<double>>& x) const;

 private:
  struct Impl;
  std::size_t n_;
  std::unique_ptr<Impl> impl_;
};

/// c[k] = sum_i a[i] b[(i + k) mod n] for real sequences of equal length.
std::vector<double> cyclic_correlation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace latqmc
