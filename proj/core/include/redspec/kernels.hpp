#pragma once

#include <cmath>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "redspec/signal.hpp"

namespace redspec {

enum class KernelFamily { D, S, L1 };
const char* to_string(KernelFamily f) noexcept;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
  double width() const noexcept { return hi - lo; }
  bool bounded() const noexcept { return std::isfinite(lo) && std::isfinite(hi); }
  static Interval everything() {
    return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
};

// Analytic description of a kernel: time profile and Fourier transform
// khat(w) = int e^{-iwt} k(t) dt.
class KernelShape {
 public:
  virtual ~KernelShape() = default;
  virtual cplx time(double t) const = 0;
  virtual cplx ft(double w) const = 0;
  virtual KernelFamily family() const = 0;
  virtual Interval ft_support() const { return Interval::everything(); }
  // Compact time support half-width, or +inf.
  virtual double time_support() const { return std::numeric_limits<double>::infinity(); }
  // Recommended frequency grid spacing for stored transform samples.
  virtual double ft_step() const { return 0.02; }
  // Frequency window on which transform samples are stored.
  virtual Interval ft_window() const;
  virtual std::string id() const = 0;
};

struct KernelSampling {
  double dt = 0.01;
  double cut_rel = 1e-14;     // drop where |k| < cut_rel * max|k|
  double max_halfwidth = 400; // hard cap on the sampled window
};

class TestKernel {
 public:
  TestKernel() = default;
  TestKernel(std::shared_ptr<const KernelShape> shape, const KernelSampling& sampling);

  const std::string& id() const noexcept { return id_; }
  KernelFamily family() const noexcept { return shape_->family(); }
  const KernelShape& shape() const noexcept { return *shape_; }
  std::shared_ptr<const KernelShape> shape_ptr() const noexcept { return shape_; }
  const KernelSampling& sampling() const noexcept { return sampling_; }

  // Scalar full-line samples on t = -M dt .. M dt.
  const SampledSignal& samples() const noexcept { return samples_; }
  long half_steps() const noexcept { return half_; }
  const std::vector<double>& ft_grid() const noexcept { return ft_grid_; }
  const std::vector<cplx>& ft_samples() const noexcept { return ft_samples_; }
  Interval ft_support() const noexcept { return shape_->ft_support(); }
  // int over the discarded tails of |k|.
  double cut_mass() const noexcept { return cut_mass_; }
  double l1_norm() const noexcept { return l1_; }
  cplx mass() const noexcept { return mass_; }

  cplx time(double t) const { return shape_->time(t); }
  cplx ft(double w) const { return shape_->ft(w); }

  // Max deviation between trapezoid transforms of the samples and ft_samples.
  double fourier_consistency() const;
  double tol_ft() const noexcept { return 1e-8 * (1.0 + l1_); }

  TestKernel at_dt(double dt) const;
  TestKernel modulated(double omega) const;
  // k' via iw khat; only for compactly supported transforms.
  TestKernel derivative() const;

 private:
  std::shared_ptr<const KernelShape> shape_;
  KernelSampling sampling_;
  std::string id_;
  SampledSignal samples_;
  long half_ = 0;
  std::vector<double> ft_grid_;
  std::vector<cplx> ft_samples_;
  double cut_mass_ = 0.0;
  double l1_ = 0.0;
  cplx mass_{};
};

// s_h = (1/h) indicator of (-h, 0).
class BoxKernel {
 public:
  explicit BoxKernel(double h);
  double h() const noexcept { return h_; }
  cplx ft(double w) const;
  TestKernel to_test_kernel(const KernelSampling& sampling) const;

 private:
  double h_;
};

// f_lambda(t) = e^{-lambda t} on t >= 0 for Re lambda > 0, and
// -e^{-lambda t} on t < 0 for Re lambda < 0.
class ExpKernel {
 public:
  explicit ExpKernel(cplx lambda);
  cplx lambda() const noexcept { return lambda_; }
  bool right_sided() const noexcept { return lambda_.real() > 0; }
  cplx time(double t) const;
  cplx ft(double w) const;
  TestKernel to_test_kernel(const KernelSampling& sampling) const;

 private:
  cplx lambda_;
};

// Building blocks shared with tests.
namespace bump {
// Unnormalized e^{1/(t^2-1)} on (-1,1).
double raw(double t) noexcept;
// a with 2 pi a^2 int e^{2/(t^2-1)} = 1.
double normalization();
// Mass of raw over [-1,1].
double raw_mass();
// phi = a raw.
double phi(double t) noexcept;
// phi_hat(w) (real, even).
double phi_hat(double w);
// psi(t) = phi_hat(t)^2.
double psi(double t);
// psi_hat(w) = 2 pi (phi * phi)(w).
double psi_hat(double w);
// rho = raw / raw_mass, a mass-one bump on [-1,1]; rho_hat its transform.
double rho(double t) noexcept;
double rho_hat(double w);
// int_{-1}^{u} rho.
double rho_cdf(double u);
// 1_{[a,b]} * rho_eps evaluated at w: 1 on [a+eps, b-eps], 0 outside [a-eps, b+eps].
double plateau(double w, double a, double b, double eps);
}  // namespace bump

TestKernel bump_kernel(const KernelSampling& sampling = {});
TestKernel approximate_identity(int n, const KernelSampling& sampling = {});
TestKernel bandpass_kernel(double omega0, double delta, const KernelSampling& sampling = {});
// Compact time-domain bump of mass one, modulated by omega0; family D.
TestKernel time_bump_kernel(double omega0, double halfwidth, const KernelSampling& sampling = {});
// Annihilator for e^t at frequency omega: f = phi on [0,a], -e^{2t} phi(-t) on
// t < 0, normalized so fhat(omega) = 1; family D.
TestKernel annihilator_kernel(double omega, const KernelSampling& sampling = {});

struct WienerOptions {
  double eps_div = 1e-6;
  double margin = 0.0;  // 0 selects 0.1 |K|
};
// g with ghat fhat = 1 on K and compact ghat.
TestKernel wiener_divide(const TestKernel& f, Interval K, const WienerOptions& opts = {},
                         const KernelSampling& sampling = {});
// sup over a fine K-grid of |ghat fhat - 1|.
double wiener_residual(const TestKernel& g, const TestKernel& f, Interval K, std::size_t points = 2001);

}  // namespace redspec
