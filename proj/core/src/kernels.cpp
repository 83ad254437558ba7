#include "redspec/kernels.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

using std::numbers::pi;

const char* to_string(KernelFamily f) noexcept {
  switch (f) {
    case KernelFamily::D: return "D";
    case KernelFamily::S: return "S";
    case KernelFamily::L1: return "L1";
  }
  return "?";
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

// Nodes t_j = j h on [0,1) for the even trapezoid sum over [-1,1].
struct BumpTable {
  static constexpr int kHalf = 1200;
  double h = 1.0 / kHalf;
  std::vector<double> raw;  // raw(j h), j = 0..kHalf-1
  double raw_mass = 0.0;
  double raw_sq_mass = 0.0;
  BumpTable() {
    raw.resize(kHalf);
    for (int j = 0; j < kHalf; ++j) raw[static_cast<std::size_t>(j)] = bump::raw(j * h);
    double s = raw[0], s2 = raw[0] * raw[0];
    for (int j = 1; j < kHalf; ++j) {
      s += 2 * raw[static_cast<std::size_t>(j)];
      s2 += 2 * raw[static_cast<std::size_t>(j)] * raw[static_cast<std::size_t>(j)];
    }
    raw_mass = s * h;
    raw_sq_mass = s2 * h;
  }
  // int_{-1}^{1} raw(t) cos(w t) dt
  double cos_transform(double w) const {
    double s = raw[0];
    // cos(j x) by rotation to avoid a libm call per node
    double c = std::cos(w * h), sn = std::sin(w * h);
    double cj = 1.0, sj = 0.0;
    for (int j = 1; j < kHalf; ++j) {
      double nc = cj * c - sj * sn;
      sj = sj * c + cj * sn;
      cj = nc;
      if ((j & 127) == 0) {
        cj = std::cos(w * j * h);
        sj = std::sin(w * j * h);
      }
      s += 2 * raw[static_cast<std::size_t>(j)] * cj;
    }
    return s * h;
  }
};

const BumpTable& table() {
  static const BumpTable t;
  return t;
}

// Half-width and window for a non-compact kernel scan.
double scan_halfwidth(const KernelShape& s, const KernelSampling& sp, double kmax) {
  double thr = sp.cut_rel * kmax;
  double t = 0.0;
  double last_above = 0.0;
  double step = sp.dt;
  while (t < sp.max_halfwidth) {
    t += step;
    double v = std::max(std::abs(s.time(t)), std::abs(s.time(-t)));
    if (v >= thr) last_above = t;
    double win = 10.0 + 0.05 * t;
    if (t - last_above > win) break;
    // coarser steps once far from the peak; the final sampling is redone at dt
    step = std::max(sp.dt, std::min(0.05, 0.25 * sp.dt * (1.0 + t)));
  }
  return std::min(last_above + sp.dt, sp.max_halfwidth);
}

double max_abs_freq(const KernelShape& s) {
  Interval sup = s.ft_support();
  if (!sup.bounded()) return std::numeric_limits<double>::infinity();
  return std::max(std::abs(sup.lo), std::abs(sup.hi));
}

class BumpShape final : public KernelShape {
 public:
  explicit BumpShape(int n) : n_(n) {}
  cplx time(double t) const override { return n_ * bump::psi(n_ * t); }
  cplx ft(double w) const override { return bump::psi_hat(w / n_); }
  KernelFamily family() const override { return KernelFamily::S; }
  Interval ft_support() const override { return {-2.0 * n_, 2.0 * n_}; }
  double ft_step() const override { return 0.02 * n_; }
  std::string id() const override { return "bump(n=" + std::to_string(n_) + ")"; }

 private:
  int n_;
};

class BandpassShape final : public KernelShape {
 public:
  BandpassShape(double w0, double delta) : w0_(w0), d_(delta) {}
  cplx time(double t) const override {
    double c = 1.5 * d_;
    double core = t == 0.0 ? c / pi : std::sin(c * t) / (pi * t);
    return std::polar(core * bump::rho_hat(0.5 * d_ * t), w0_ * t);
  }
  cplx ft(double w) const override { return bump::plateau(w - w0_, -1.5 * d_, 1.5 * d_, 0.5 * d_); }
  KernelFamily family() const override { return KernelFamily::S; }
  Interval ft_support() const override { return {w0_ - 2 * d_, w0_ + 2 * d_}; }
  double ft_step() const override { return d_ / 50.0; }
  std::string id() const override { return "bandpass(w0=" + num(w0_) + ",delta=" + num(d_) + ")"; }

 private:
  double w0_, d_;
};

class TimeBumpShape final : public KernelShape {
 public:
  TimeBumpShape(double w0, double L) : w0_(w0), L_(L) {}
  cplx time(double t) const override { return std::polar(bump::rho(t / L_) / L_, w0_ * t); }
  cplx ft(double w) const override { return bump::rho_hat((w - w0_) * L_); }
  KernelFamily family() const override { return KernelFamily::D; }
  double time_support() const override { return L_; }
  double ft_step() const override { return std::min(0.02, 0.25 / L_); }
  Interval ft_window() const override { return {w0_ - 40.0 / L_, w0_ + 40.0 / L_}; }
  std::string id() const override { return "time-bump(w0=" + num(w0_) + ",L=" + num(L_) + ")"; }

 private:
  double w0_, L_;
};

class AnnihilatorShape final : public KernelShape {
 public:
  explicit AnnihilatorShape(double w) : w_(w) {
    a_ = w == 0.0 ? 1.0 : std::min(1.0, pi / (2.0 * std::abs(w)));
    const double h = a_ / kNodes;
    for (int j = 1; j < kNodes; ++j) {
      prof_[j] = prof(j * h);
      damp_[j] = std::exp(-2.0 * j * h);
    }
    norm_ = 1.0;
    norm_ = 1.0 / raw_ft(w);
  }
  cplx time(double t) const override {
    if (t >= 0.0) return norm_ * prof(t);
    return -norm_ * std::exp(2.0 * t) * prof(-t);
  }
  cplx ft(double xi) const override { return norm_ * raw_ft(xi); }
  KernelFamily family() const override { return KernelFamily::D; }
  double time_support() const override { return a_; }
  double ft_step() const override { return 0.02; }
  Interval ft_window() const override { return {w_ - 20.0, w_ + 20.0}; }
  std::string id() const override { return "annihilator(w=" + num(w_) + ",a=" + num(a_) + ")"; }
  double a() const { return a_; }

 private:
  double prof(double t) const { return t <= 0.0 || t >= a_ ? 0.0 : bump::raw(2.0 * t / a_ - 1.0); }
  // int_0^a prof(s) [e^{-i xi s} - e^{-2s} e^{i xi s}] ds
  cplx raw_ft(double xi) const {
    const double h = a_ / kNodes;
    const cplx rot = std::polar(1.0, -xi * h);
    cplx e = rot;
    cplx s{};
    for (int j = 1; j < kNodes; ++j) {
      s += prof_[j] * (e - damp_[j] * std::conj(e));
      e *= rot;
      if ((j & 255) == 255) e = std::polar(1.0, -xi * (j + 1) * h);
    }
    return s * h;
  }
  static constexpr int kNodes = 2000;
  std::array<double, kNodes> prof_{}, damp_{};
  double w_, a_;
  cplx norm_;
};

// Inverse transform (1/2pi) int khat(xi) e^{i xi t} d xi from a table on a
// compact frequency interval.
class InverseTable {
 public:
  InverseTable() = default;
  InverseTable(Interval band, std::size_t n, const std::function<cplx(double)>& fhat)
      : lo_(band.lo), step_((band.hi - band.lo) / static_cast<double>(n - 1)), vals_(n) {
    for (std::size_t j = 0; j < n; ++j) vals_[j] = fhat(lo_ + static_cast<double>(j) * step_);
  }
  cplx eval(double t) const {
    cplx rot = std::polar(1.0, step_ * t);
    cplx e = std::polar(1.0, lo_ * t);
    cplx s{};
    for (std::size_t j = 0; j < vals_.size(); ++j) {
      double wgt = (j == 0 || j + 1 == vals_.size()) ? 0.5 : 1.0;
      s += wgt * vals_[j] * e;
      e *= rot;
      if ((j & 255) == 255) e = std::polar(1.0, (lo_ + static_cast<double>(j + 1) * step_) * t);
    }
    return s * step_ / (2.0 * pi);
  }

 private:
  double lo_ = 0, step_ = 1;
  std::vector<cplx> vals_;
};

std::size_t table_points(Interval band, double halfwidth) {
  double need = band.width() * halfwidth / pi * 4.0;
  return static_cast<std::size_t>(std::clamp(need, 2001.0, 40001.0));
}

class QuotientShape final : public KernelShape {
 public:
  QuotientShape(std::shared_ptr<const KernelShape> f, Interval K, double margin, double halfwidth)
      : f_(std::move(f)), K_(K), m_(margin) {
    Interval band = ft_support();
    inv_ = InverseTable(band, table_points(band, halfwidth), [this](double x) { return ft(x); });
  }
  cplx time(double t) const override { return inv_.eval(t); }
  cplx ft(double xi) const override {
    if (xi <= K_.lo - m_ || xi >= K_.hi + m_) return 0.0;
    double chi = bump::plateau(xi, K_.lo - 0.5 * m_, K_.hi + 0.5 * m_, 0.5 * m_);
    if (chi == 0.0) return 0.0;
    return chi / f_->ft(xi);
  }
  KernelFamily family() const override { return KernelFamily::S; }
  Interval ft_support() const override { return {K_.lo - m_, K_.hi + m_}; }
  double ft_step() const override { return std::min(0.02, m_ / 50.0); }
  std::string id() const override {
    return "quotient(" + f_->id() + ",K=[" + num(K_.lo) + "," + num(K_.hi) + "])";
  }

 private:
  std::shared_ptr<const KernelShape> f_;
  Interval K_;
  double m_;
  InverseTable inv_;
};

class DerivativeShape final : public KernelShape {
 public:
  DerivativeShape(std::shared_ptr<const KernelShape> base, double halfwidth) : b_(std::move(base)) {
    Interval band = b_->ft_support();
    inv_ = InverseTable(band, table_points(band, halfwidth), [this](double x) { return ft(x); });
  }
  cplx time(double t) const override { return inv_.eval(t); }
  cplx ft(double xi) const override { return cplx(0.0, xi) * b_->ft(xi); }
  KernelFamily family() const override { return b_->family(); }
  Interval ft_support() const override { return b_->ft_support(); }
  double ft_step() const override { return b_->ft_step(); }
  Interval ft_window() const override { return b_->ft_window(); }
  std::string id() const override { return "d/dt " + b_->id(); }

 private:
  std::shared_ptr<const KernelShape> b_;
  InverseTable inv_;
};

class ModulatedShape final : public KernelShape {
 public:
  ModulatedShape(std::shared_ptr<const KernelShape> base, double w) : b_(std::move(base)), w_(w) {}
  cplx time(double t) const override { return std::polar(1.0, w_ * t) * b_->time(t); }
  cplx ft(double xi) const override { return b_->ft(xi - w_); }
  KernelFamily family() const override { return b_->family(); }
  Interval ft_support() const override {
    Interval s = b_->ft_support();
    return {s.lo + w_, s.hi + w_};
  }
  double time_support() const override { return b_->time_support(); }
  double ft_step() const override { return b_->ft_step(); }
  Interval ft_window() const override {
    Interval s = b_->ft_window();
    return {s.lo + w_, s.hi + w_};
  }
  std::string id() const override { return "mod(" + num(w_) + ")" + b_->id(); }

 private:
  std::shared_ptr<const KernelShape> b_;
  double w_;
};

class BoxShape final : public KernelShape {
 public:
  explicit BoxShape(double h) : h_(h) {}
  cplx time(double t) const override {
    double tol = 1e-12 * h_;
    if (std::abs(t) <= tol || std::abs(t + h_) <= tol) return 0.5 / h_;
    return (t < 0.0 && t > -h_) ? 1.0 / h_ : 0.0;
  }
  cplx ft(double w) const override {
    double x = w * h_;
    if (std::abs(x) < 1e-8) return cplx(1.0, 0.5 * x);
    return (std::polar(1.0, x) - 1.0) / cplx(0.0, x);
  }
  KernelFamily family() const override { return KernelFamily::L1; }
  double time_support() const override { return h_; }
  Interval ft_window() const override { return {-20.0, 20.0}; }
  std::string id() const override { return "box(h=" + num(h_) + ")"; }

 private:
  double h_;
};

class ExpShape final : public KernelShape {
 public:
  ExpShape(cplx lambda, double cut_rel) : l_(lambda), cut_rel_(cut_rel) {}
  cplx time(double t) const override {
    if (l_.real() > 0) {
      if (t > 0) return std::exp(-l_ * t);
      return t == 0.0 ? 0.5 : 0.0;
    }
    if (t < 0) return -std::exp(-l_ * t);
    return t == 0.0 ? -0.5 : 0.0;
  }
  cplx ft(double w) const override { return 1.0 / (l_ + cplx(0.0, w)); }
  KernelFamily family() const override { return KernelFamily::L1; }
  double time_support() const override { return -std::log(cut_rel_) / std::abs(l_.real()); }
  Interval ft_window() const override { return {-20.0, 20.0}; }
  std::string id() const override {
    return "exp(lambda=" + num(l_.real()) + (l_.imag() < 0 ? "" : "+") + num(l_.imag()) + "i)";
  }
  double tail(double W) const { return std::exp(-std::abs(l_.real()) * W) / std::abs(l_.real()); }

 private:
  cplx l_;
  double cut_rel_;
};

}  // namespace

Interval KernelShape::ft_window() const {
  Interval s = ft_support();
  if (!s.bounded()) return {-20.0, 20.0};
  double pad = 0.25 * std::max(s.width(), 1e-3);
  return {s.lo - pad, s.hi + pad};
}

namespace bump {

double raw(double t) noexcept {
  double t2 = t * t;
  return t2 < 1.0 ? std::exp(1.0 / (t2 - 1.0)) : 0.0;
}

double raw_mass() { return table().raw_mass; }

double normalization() {
  static const double a = 1.0 / std::sqrt(2.0 * pi * table().raw_sq_mass);
  return a;
}

double phi(double t) noexcept { return normalization() * raw(t); }

double phi_hat(double w) { return normalization() * table().cos_transform(w); }

double psi(double t) {
  double p = phi_hat(t);
  return p * p;
}

double psi_hat(double w) {
  double lo = std::max(-1.0, w - 1.0), hi = std::min(1.0, w + 1.0);
  if (hi <= lo) return 0.0;
  constexpr int n = 1000;
  double h = (hi - lo) / n;
  double s = 0.0;
  for (int j = 1; j < n; ++j) {
    double x = lo + j * h;
    s += raw(x) * raw(w - x);
  }
  double a = normalization();
  return 2.0 * pi * a * a * s * h;
}

double rho(double t) noexcept { return raw(t) / table().raw_mass; }

double rho_hat(double w) { return table().cos_transform(w) / table().raw_mass; }

double rho_cdf(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  constexpr int panels = 16;
  double h = (u + 1.0) / panels;
  double s = 0.0;
  for (int p = 0; p < panels; ++p) {
    double a = -1.0 + p * h;
    s += boost::math::quadrature::gauss<double, 20>::integrate(
        [](double x) { return raw(x); }, a, a + h);
  }
  return s / table().raw_mass;
}

double plateau(double w, double a, double b, double eps) {
  double hi = rho_cdf((w - a) / eps);
  double lo = rho_cdf((w - b) / eps);
  return hi - lo;
}

}  // namespace bump

TestKernel::TestKernel(std::shared_ptr<const KernelShape> shape, const KernelSampling& sampling)
    : shape_(std::move(shape)), sampling_(sampling) {
  if (!(sampling.dt > 0)) fail(ErrorKind::GridMismatch, "kernel dt must be positive");
  id_ = shape_->id();
  const KernelShape& s = *shape_;
  const double dt = sampling.dt;

  double support = s.time_support();
  double W;
  if (std::isfinite(support)) {
    W = std::min(support, sampling.max_halfwidth);
  } else {
    double kmax = 0.0;
    for (int j = -200; j <= 200; ++j) kmax = std::max(kmax, std::abs(s.time(j * 0.01)));
    W = scan_halfwidth(s, sampling, kmax);
  }
  half_ = static_cast<long>(std::ceil(W / dt - 1e-9));
  std::size_t n = static_cast<std::size_t>(2 * half_ + 1);
  std::vector<cplx> v(n);
  for (std::size_t m = 0; m < n; ++m) v[m] = s.time((static_cast<double>(m) - static_cast<double>(half_)) * dt);
  samples_ = SampledSignal(Domain::FullLine, -static_cast<double>(half_) * dt, dt, 1, std::move(v),
                           std::nullopt, false);

  double Ws = static_cast<double>(half_) * dt;
  if (auto* e = dynamic_cast<const ExpShape*>(&s)) {
    cut_mass_ = e->tail(Ws);
  } else if (std::isfinite(support) && Ws >= support) {
    cut_mass_ = 0.0;
  } else {
    double fmax = max_abs_freq(s);
    double step = std::isfinite(fmax) ? std::min(0.25, pi / (10.0 * std::max(fmax, 1e-3))) : dt;
    step = std::max(step, dt);
    double end = std::isfinite(support) ? std::min(support, 8.0 * Ws) : 8.0 * Ws;
    double acc = 0.0;
    double prev = std::abs(s.time(Ws)) + std::abs(s.time(-Ws));
    for (double t = Ws + step; t <= end; t += step) {
      double cur = std::abs(s.time(t)) + std::abs(s.time(-t));
      acc += 0.5 * (prev + cur) * step;
      prev = cur;
    }
    cut_mass_ = acc;
  }

  double l1 = 0.0;
  cplx mass{};
  for (std::size_t m = 0; m < n; ++m) {
    l1 += std::abs(samples_.at(m));
    mass += samples_.at(m);
  }
  l1_ = l1 * dt + cut_mass_;
  mass_ = mass * dt;

  Interval win = s.ft_window();
  double fstep = s.ft_step();
  std::size_t nf = static_cast<std::size_t>(std::floor(win.width() / fstep)) + 1;
  nf = std::clamp<std::size_t>(nf, 3, 4001);
  double fs = win.width() / static_cast<double>(nf - 1);
  ft_grid_.resize(nf);
  ft_samples_.resize(nf);
  for (std::size_t j = 0; j < nf; ++j) {
    ft_grid_[j] = win.lo + static_cast<double>(j) * fs;
    ft_samples_[j] = s.ft(ft_grid_[j]);
  }
}

double TestKernel::fourier_consistency() const {
  double worst = 0.0;
  const double dt = samples_.dt();
  const std::size_t n = samples_.size();
  for (std::size_t j = 0; j < ft_grid_.size(); ++j) {
    double w = ft_grid_[j];
    cplx rot = std::polar(1.0, -w * dt);
    cplx e = std::polar(1.0, -w * samples_.t0());
    cplx s{};
    for (std::size_t m = 0; m < n; ++m) {
      s += samples_.at(m) * e;
      e *= rot;
      if ((m & 1023) == 1023) e = std::polar(1.0, -w * samples_.time(m + 1));
    }
    worst = std::max(worst, std::abs(s * dt - ft_samples_[j]));
  }
  return worst;
}

TestKernel TestKernel::at_dt(double dt) const {
  KernelSampling sp = sampling_;
  sp.dt = dt;
  return TestKernel(shape_, sp);
}

TestKernel TestKernel::modulated(double omega) const {
  return TestKernel(std::make_shared<ModulatedShape>(shape_, omega), sampling_);
}

TestKernel TestKernel::derivative() const {
  if (!shape_->ft_support().bounded())
    fail(ErrorKind::Domain, "spectral derivative needs a compactly supported transform");
  return TestKernel(std::make_shared<DerivativeShape>(shape_, sampling_.max_halfwidth), sampling_);
}

BoxKernel::BoxKernel(double h) : h_(h) {
  if (!(h > 0)) fail(ErrorKind::Domain, "box kernel width must be positive");
}

cplx BoxKernel::ft(double w) const { return BoxShape(h_).ft(w); }

TestKernel BoxKernel::to_test_kernel(const KernelSampling& sampling) const {
  return TestKernel(std::make_shared<BoxShape>(h_), sampling);
}

ExpKernel::ExpKernel(cplx lambda) : lambda_(lambda) {
  if (lambda.real() == 0.0)
    fail(ErrorKind::Domain, "exponential kernel needs Re lambda != 0 (f_lambda is not integrable)");
}

cplx ExpKernel::time(double t) const { return ExpShape(lambda_, 1e-14).time(t); }
cplx ExpKernel::ft(double w) const { return 1.0 / (lambda_ + cplx(0.0, w)); }

TestKernel ExpKernel::to_test_kernel(const KernelSampling& sampling) const {
  return TestKernel(std::make_shared<ExpShape>(lambda_, sampling.cut_rel), sampling);
}

TestKernel bump_kernel(const KernelSampling& sampling) { return approximate_identity(1, sampling); }

TestKernel approximate_identity(int n, const KernelSampling& sampling) {
  if (n < 1) fail(ErrorKind::Domain, "approximate identity index must be >= 1");
  return TestKernel(std::make_shared<BumpShape>(n), sampling);
}

TestKernel bandpass_kernel(double omega0, double delta, const KernelSampling& sampling) {
  if (!(delta > 0)) fail(ErrorKind::Domain, "bandpass half-width must be positive");
  return TestKernel(std::make_shared<BandpassShape>(omega0, delta), sampling);
}

TestKernel time_bump_kernel(double omega0, double halfwidth, const KernelSampling& sampling) {
  if (!(halfwidth > 0)) fail(ErrorKind::Domain, "bump half-width must be positive");
  return TestKernel(std::make_shared<TimeBumpShape>(omega0, halfwidth), sampling);
}

TestKernel annihilator_kernel(double omega, const KernelSampling& sampling) {
  return TestKernel(std::make_shared<AnnihilatorShape>(omega), sampling);
}

TestKernel wiener_divide(const TestKernel& f, Interval K, const WienerOptions& opts,
                         const KernelSampling& sampling) {
  if (!K.bounded() || K.hi < K.lo) fail(ErrorKind::Domain, "division set K must be a compact interval");
  auto min_abs = [&](double lo, double hi) {
    double m = std::numeric_limits<double>::infinity();
    constexpr int n = 2001;
    for (int j = 0; j < n; ++j) {
      double x = lo + (hi - lo) * j / (n - 1);
      m = std::min(m, std::abs(f.ft(x)));
    }
    return m;
  };
  double mk = min_abs(K.lo, K.hi);
  if (mk < opts.eps_div)
    fail(ErrorKind::Division, "fhat falls to " + num(mk) + " on K; division needs fhat != 0 on the compact set K");
  double m = opts.margin > 0 ? opts.margin : 0.1 * std::max(K.width(), 1e-2);
  int tries = 0;
  while (min_abs(K.lo - m, K.hi + m) < opts.eps_div) {
    m *= 0.5;
    if (++tries > 30) fail(ErrorKind::Division, "no margin keeps fhat away from zero around K");
  }
  TestKernel g(std::make_shared<QuotientShape>(f.shape_ptr(), K, m, sampling.max_halfwidth), sampling);
  double r = wiener_residual(g, f, K);
  if (r > 1e-8) fail(ErrorKind::Division, "division residual " + num(r) + " exceeds 1e-8 on K");
  return g;
}

double wiener_residual(const TestKernel& g, const TestKernel& f, Interval K, std::size_t points) {
  double worst = 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    double x = K.lo + K.width() * static_cast<double>(j) / static_cast<double>(points - 1);
    worst = std::max(worst, std::abs(g.ft(x) * f.ft(x) - 1.0));
  }
  return worst;
}

}  // namespace redspec
