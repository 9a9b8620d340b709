#include "afflow/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "afflow/errors.hpp"
#include "afflow/grid.hpp"

namespace afflow {

namespace {

// FFTW's planner is not thread-safe; plan creation is serialized globally.
// Execution runs on per-thread buffers, so transforms never contend.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class FftEngine {
 public:
  explicit FftEngine(std::size_t n) : n_(n) {
    real_ = fftw_alloc_real(n);
    spec_ = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), real_, spec_, FFTW_ESTIMATE);
    inv_ = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec_, real_, FFTW_ESTIMATE);
  }

  ~FftEngine() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(inv_);
    fftw_free(real_);
    fftw_free(spec_);
  }

  FftEngine(const FftEngine&) = delete;
  FftEngine& operator=(const FftEngine&) = delete;

  // c_k = (1/n) sum_j f_j e^{-ik theta_j}, k = 0..n/2
  std::vector<std::complex<double>> forward(std::span<const double> f) {
    std::memcpy(real_, f.data(), n_ * sizeof(double));
    fftw_execute(fwd_);
    std::vector<std::complex<double>> out(n_ / 2 + 1);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = {spec_[k][0] * scale, spec_[k][1] * scale};
    }
    return out;
  }

  std::vector<double> inverse(std::span<const std::complex<double>> c) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      spec_[k][0] = c[k].real();
      spec_[k][1] = c[k].imag();
    }
    fftw_execute(inv_);
    return std::vector<double>(real_, real_ + n_);
  }

 private:
  std::size_t n_;
  double* real_;
  fftw_complex* spec_;
  fftw_plan fwd_;
  fftw_plan inv_;
};

FftEngine& engine_for(std::size_t n) {
  thread_local std::map<std::size_t, std::unique_ptr<FftEngine>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FftEngine>(n);
  return *slot;
}

void require_usable(std::span<const double> f) {
  if (f.size() < 4 || f.size() % 2 != 0) {
    throw std::invalid_argument("periodic sample length must be even and >= 4");
  }
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!std::isfinite(f[j])) throw NonFiniteError(j);
  }
}

}  // namespace

std::vector<double> spectral_derivative(std::span<const double> f, int order) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("derivative order must be 1 or 2");
  }
  require_usable(f);

  const std::size_t n = f.size();
  auto& engine = engine_for(n);
  auto c = engine.forward(f);
  if (order == 1) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
      c[k] *= std::complex<double>(0.0, static_cast<double>(k));
    }
    c.back() = 0.0;  // Nyquist carries no usable odd-derivative information
  } else {
    for (std::size_t k = 0; k < c.size(); ++k) {
      c[k] *= -static_cast<double>(k) * static_cast<double>(k);
    }
  }
  return engine.inverse(c);
}

FourierCoefficients fourier_coefficients(std::span<const double> f) {
  require_usable(f);
  const std::size_t n = f.size();
  auto c = engine_for(n).forward(f);

  FourierCoefficients out;
  out.cos_coef.resize(n / 2 + 1);
  out.sin_coef.assign(n / 2 + 1, 0.0);
  out.cos_coef[0] = c[0].real();
  for (std::size_t k = 1; k < n / 2; ++k) {
    out.cos_coef[k] = 2.0 * c[k].real();
    out.sin_coef[k] = -2.0 * c[k].imag();
  }
  out.cos_coef[n / 2] = c[n / 2].real();
  return out;
}

TrigInterpolant::TrigInterpolant(std::span<const double> samples)
    : n_(samples.size()), coef_(fourier_coefficients(samples)) {}

double TrigInterpolant::operator()(double angle) const noexcept {
  double value = coef_.cos_coef[0];
  for (std::size_t k = 1; k < coef_.cos_coef.size(); ++k) {
    const double ka = static_cast<double>(k) * angle;
    value += coef_.cos_coef[k] * std::cos(ka) + coef_.sin_coef[k] * std::sin(ka);
  }
  return value;
}

double TrigInterpolant::derivative(double angle) const noexcept {
  double value = 0.0;
  for (std::size_t k = 1; k < coef_.cos_coef.size(); ++k) {
    const double kd = static_cast<double>(k);
    const double ka = kd * angle;
    value += kd * (coef_.sin_coef[k] * std::cos(ka) - coef_.cos_coef[k] * std::sin(ka));
  }
  return value;
}

}  // namespace afflow
