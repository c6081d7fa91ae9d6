#include "latqmc/fft.hpp"

#include <algorithm>
#include <mutex>

#include <fftw3.h>

#include "latqmc/errors.hpp"

namespace latqmc {

namespace {
// The FFTW planner is not reentrant.
std::mutex planner_mutex;
}  // namespace

struct FftPlan::Impl {
  fftw_complex* buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  explicit Impl(std::size_t n) {
    std::lock_guard lock(planner_mutex);
    buf = fftw_alloc_complex(n);
    fwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Impl() {
    std::lock_guard lock(planner_mutex);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf);
  }

  void run(fftw_plan p, std::vector<std::complex<double>>& x) const {
    auto* b = reinterpret_cast<std::complex<double>*>(buf);
    std::copy(x.begin(), x.end(), b);
    fftw_execute(p);
    std::copy(b, b + x.size(), x.begin());
  }
};

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw PreconditionError("FFT length must be positive");
  if (n > (std::size_t{1} << 31)) throw GuardError("FFT length too large");
  impl_ = std::make_unique<Impl>(n);
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

void FftPlan::forward(std::vector<std::complex<double>>& x) const {
  if (x.size() != n_) throw PreconditionError("FFT input length mismatch");
  impl_->run(impl_->fwd, x);
}

void FftPlan::inverse(std::vector<std::complex<double>>& x) const {
  if (x.size() != n_) throw PreconditionError("FFT input length mismatch");
  impl_->run(impl_->bwd, x);
  const double scale = 1.0 / static_cast<double>(n_);
  for (auto& v : x) v *= scale;
}

std::vector<double> cyclic_correlation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw PreconditionError("cyclic_correlation needs equal lengths");
  const std::size_t n = a.size();
  if (n == 0) return {};
  FftPlan plan(n);
  std::vector<std::complex<double>> ah(a.begin(), a.end());
  std::vector<std::complex<double>> bh(b.begin(), b.end());
  plan.forward(ah);
  plan.forward(bh);
  for (std::size_t k = 0; k < n; ++k) ah[k] = std::conj(ah[k]) * bh[k];
  plan.inverse(ah);
  std::vector<double> c(n);
  std::transform(ah.begin(), ah.end(), c.begin(), [](const std::complex<double>& v) { return v.real(); });
  return c;
}

}  // namespace latqmc
