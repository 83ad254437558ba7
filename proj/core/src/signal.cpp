#include "redspec/signal.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

const char* to_string(Domain d) noexcept { return d == Domain::HalfLine ? "half-line" : "full-line"; }

namespace {

bool same_lattice(double a, double b, double dt) {
  double q = (a - b) / dt;
  return std::abs(q - std::round(q)) <= kLatticeTol * std::max(1.0, std::abs(q));
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

SampledSignal::SampledSignal(Domain domain, double t0, double dt, std::size_t dim,
                             std::vector<cplx> values, std::optional<int> growth,
                             bool validate)
    : domain_(domain), t0_(t0), dt_(dt), dim_(dim), growth_(growth) {
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::GridMismatch, "dt must be positive");
  if (dim == 0) fail(ErrorKind::GridMismatch, "dimension must be at least 1");
  if (values.empty()) fail(ErrorKind::GridMismatch, "signal has no samples");
  if (values.size() % dim != 0) fail(ErrorKind::GridMismatch, "value count not a multiple of dim");
  if (domain == Domain::HalfLine && t0 != 0.0)
    fail(ErrorKind::GridMismatch, "half-line signal must start at t = 0, got " + fmt(t0));
  if (growth && *growth < 0) fail(ErrorKind::Growth, "growth exponent must be nonnegative");
  n_ = values.size() / dim;
  data_ = std::make_shared<const std::vector<cplx>>(std::move(values));
  if (validate && growth) validate_growth(*this, *growth);
}

double SampledSignal::norm_at(std::size_t i) const noexcept {
  const cplx* r = row(i);
  if (dim_ == 1) return std::abs(r[0]);
  double s = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) s += std::norm(r[c]);
  return std::sqrt(s);
}

double SampledSignal::sup_norm() const noexcept { return sup_norm(0, n_); }

double SampledSignal::sup_norm(std::size_t i0, std::size_t i1) const noexcept {
  double m = 0.0;
  i1 = std::min(i1, n_);
  for (std::size_t i = i0; i < i1; ++i) m = std::max(m, norm_at(i));
  return m;
}

std::vector<cplx> SampledSignal::to_vector() const {
  return std::vector<cplx>(row(0), row(0) + n_ * dim_);
}

std::optional<std::size_t> SampledSignal::index_of(double t) const noexcept {
  double q = (t - t0_) / dt_;
  double r = std::round(q);
  if (std::abs(q - r) > kLatticeTol * std::max(1.0, std::abs(q))) return std::nullopt;
  if (r < 0 || r > static_cast<double>(n_ - 1)) return std::nullopt;
  return static_cast<std::size_t>(r);
}

long SampledSignal::steps(double s) const {
  double q = s / dt_;
  double r = std::round(q);
  if (std::abs(q - r) > kLatticeTol * std::max(1.0, std::abs(q)))
    fail(ErrorKind::GridMismatch, "shift " + fmt(s) + " is not a multiple of dt = " + fmt(dt_));
  return static_cast<long>(r);
}

SampledSignal SampledSignal::slice(std::size_t i0, std::size_t count) const {
  if (i0 + count > n_ || count == 0) fail(ErrorKind::Horizon, "slice outside record");
  SampledSignal s = *this;
  s.offset_ = offset_ + i0 * dim_;
  s.n_ = count;
  s.t0_ = time(i0);
  if (domain_ == Domain::HalfLine && i0 != 0) s.domain_ = Domain::FullLine;
  return s;
}

SampledSignal SampledSignal::decimate(std::size_t stride) const {
  if (stride == 0) fail(ErrorKind::GridMismatch, "stride must be positive");
  if (stride == 1) return *this;
  std::size_t m = (n_ - 1) / stride + 1;
  std::vector<cplx> v(m * dim_);
  for (std::size_t i = 0; i < m; ++i)
    std::copy(row(i * stride), row(i * stride) + dim_, v.begin() + static_cast<long>(i * dim_));
  return SampledSignal(domain_, t0_, dt_ * static_cast<double>(stride), dim_, std::move(v), growth_,
                       false);
}

SampledSignal SampledSignal::with_values(std::vector<cplx> values) const {
  if (values.size() != n_ * dim_) fail(ErrorKind::GridMismatch, "value count does not match grid");
  return SampledSignal(domain_, t0_, dt_, dim_, std::move(values), growth_, false);
}

SampledSignal SampledSignal::with_growth(std::optional<int> growth) const {
  SampledSignal s = *this;
  s.growth_ = growth;
  if (growth) validate_growth(s, *growth);
  return s;
}

SampledSignal SampledSignal::component(std::size_t c) const {
  std::vector<cplx> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = row(i)[c];
  return SampledSignal(domain_, t0_, dt_, 1, std::move(v), growth_, false);
}

std::optional<double> fitted_growth_slope(const SampledSignal& f) {
  // Blocks |t| in [0,1), [1,2), [2,4), ...
  std::vector<double> bmax;
  std::vector<double> bmid;
  auto block_of = [](double a) -> std::size_t {
    if (a < 1.0) return 0;
    return static_cast<std::size_t>(std::floor(std::log2(a))) + 1;
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::size_t b = block_of(std::abs(f.time(i)));
    if (b >= bmax.size()) bmax.resize(b + 1, 0.0);
    bmax[b] = std::max(bmax[b], f.norm_at(i));
  }
  std::vector<double> xs, ys;
  for (std::size_t b = 0; b < bmax.size(); ++b) {
    if (!(bmax[b] > 0.0) || !std::isfinite(bmax[b])) continue;
    double mid = b == 0 ? 0.5 : 1.5 * std::ldexp(1.0, static_cast<int>(b) - 1);
    xs.push_back(std::log1p(mid * mid));
    ys.push_back(std::log(bmax[b]));
  }
  if (xs.size() < 3) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx <= 0) return std::nullopt;
  return sxy / sxx;
}

void validate_growth(const SampledSignal& f, int k) {
  auto slope = fitted_growth_slope(f);
  if (slope && *slope > static_cast<double>(k) + 0.25)
    fail(ErrorKind::Growth, "declared growth exponent " + std::to_string(k) +
                                " contradicted by fitted slope " + fmt(*slope));
}

double Mean::norm() const noexcept {
  double s = 0;
  for (auto& v : value) s += std::norm(v);
  return std::sqrt(s);
}

ExtendedSignal::ExtendedSignal(SampledSignal base, double t_min)
    : base_(std::move(base)), zero_(base_.dim(), cplx{}) {
  if (t_min > base_.t0() + kLatticeTol * base_.dt())
    fail(ErrorKind::GridMismatch, "t_min must not exceed the record start");
  if (!same_lattice(t_min, base_.t0(), base_.dt()))
    fail(ErrorKind::GridMismatch, "t_min " + fmt(t_min) + " is off the sampling lattice");
  t_min_ = base_.domain() == Domain::HalfLine ? std::min(t_min, 0.0) : base_.t0();
  if (base_.domain() == Domain::HalfLine)
    t_min_ = -static_cast<double>(std::lround(-t_min_ / base_.dt())) * base_.dt();
}

const cplx* ExtendedSignal::row(long i) const noexcept {
  if (i >= 0 && i < static_cast<long>(base_.size())) return base_.row(static_cast<std::size_t>(i));
  if (i < 0 && base_.domain() == Domain::HalfLine) return zero_.data();
  return nullptr;
}

bool ExtendedSignal::known(long i) const noexcept {
  if (i > last_known()) return false;
  return i >= 0 || base_.domain() == Domain::HalfLine;
}

long ExtendedSignal::first_known() const noexcept {
  return base_.domain() == Domain::HalfLine ? LONG_MIN : 0;
}

SampledSignal ExtendedSignal::materialize() const {
  long lead = std::lround((base_.t0() - t_min_) / base_.dt());
  std::size_t d = base_.dim();
  std::vector<cplx> v(static_cast<std::size_t>(lead) * d, cplx{});
  v.reserve((static_cast<std::size_t>(lead) + base_.size()) * d);
  v.insert(v.end(), base_.row(0), base_.row(0) + base_.size() * d);
  return SampledSignal(Domain::FullLine, t_min_, base_.dt(), d, std::move(v),
                       base_.growth_exponent(), false);
}

ExtendedSignal extend_by_zero(const SampledSignal& f, double t_min) { return {f, t_min}; }

SampledSignal translate(const SampledSignal& f, double s) {
  long m = f.steps(s);
  if (f.domain() == Domain::FullLine) {
    return SampledSignal(Domain::FullLine, f.t0() - static_cast<double>(m) * f.dt(), f.dt(), f.dim(),
                         f.to_vector(), f.growth_exponent(), false);
  }
  if (m < 0) fail(ErrorKind::Domain, "half-line translate needs s >= 0");
  if (static_cast<std::size_t>(m) >= f.size()) fail(ErrorKind::Horizon, "shift exceeds record");
  std::vector<cplx> v(f.row(static_cast<std::size_t>(m)), f.row(0) + f.size() * f.dim());
  return SampledSignal(Domain::HalfLine, 0.0, f.dt(), f.dim(), std::move(v), f.growth_exponent(),
                       false);
}

SampledSignal modulate(const SampledSignal& f, double omega) {
  std::vector<cplx> v(f.size() * f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx e = std::polar(1.0, omega * f.time(i));
    for (std::size_t c = 0; c < f.dim(); ++c) v[i * f.dim() + c] = e * f.row(i)[c];
  }
  return f.with_values(std::move(v));
}

SampledSignal reflect(const SampledSignal& f) {
  if (f.domain() != Domain::FullLine) fail(ErrorKind::Domain, "reflect requires a full-line signal");
  std::size_t n = f.size(), d = f.dim();
  std::vector<cplx> v(n * d);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(f.row(n - 1 - i), f.row(n - 1 - i) + d, v.begin() + static_cast<long>(i * d));
  return SampledSignal(Domain::FullLine, -f.t_end(), f.dt(), d, std::move(v), f.growth_exponent(),
                       false);
}

SampledSignal difference(const SampledSignal& f, double s) {
  long m = f.steps(s);
  if (f.domain() == Domain::HalfLine && m < 0)
    fail(ErrorKind::Domain, "half-line difference needs s >= 0");
  std::size_t am = static_cast<std::size_t>(std::labs(m));
  if (am >= f.size()) fail(ErrorKind::Horizon, "shift exceeds record");
  std::size_t n = f.size() - am, d = f.dim();
  std::size_t lo = m >= 0 ? 0 : am;  // first index where both F(t) and F(t+s) exist
  std::vector<cplx> v(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = lo + i;
    std::size_t js = static_cast<std::size_t>(static_cast<long>(j) + m);
    for (std::size_t c = 0; c < d; ++c) v[i * d + c] = f.row(js)[c] - f.row(j)[c];
  }
  return SampledSignal(f.domain(), f.time(lo), f.dt(), d, std::move(v), f.growth_exponent(), false);
}

SampledSignal indefinite_integral(const SampledSignal& f) {
  std::size_t n = f.size(), d = f.dim();
  std::vector<cplx> v(n * d, cplx{});
  double h = 0.5 * f.dt();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c)
      v[i * d + c] = v[(i - 1) * d + c] + h * (f.row(i - 1)[c] + f.row(i)[c]);
  auto g = f.growth_exponent();
  return SampledSignal(f.domain(), f.t0(), f.dt(), d, std::move(v),
                       g ? std::optional<int>(*g + 1) : std::nullopt, false);
}

SampledSignal mollify(const SampledSignal& f, double h) {
  if (!(h > 0)) fail(ErrorKind::Domain, "mollifier width must be positive");
  long m = f.steps(h);
  if (m <= 0) fail(ErrorKind::GridMismatch, "mollifier width below dt");
  if (static_cast<std::size_t>(m) >= f.size()) fail(ErrorKind::Horizon, "record shorter than h");
  SampledSignal p = indefinite_integral(f);
  std::size_t n = f.size() - static_cast<std::size_t>(m), d = f.dim();
  std::vector<cplx> v(n * d);
  double hh = static_cast<double>(m) * f.dt();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c)
      v[i * d + c] = (p.row(i + static_cast<std::size_t>(m))[c] - p.row(i)[c]) / hh;
  return SampledSignal(f.domain(), f.t0(), f.dt(), d, std::move(v), f.growth_exponent(), false);
}

SampledSignal add(const SampledSignal& a, const SampledSignal& b, cplx scale_b) {
  if (a.size() != b.size() || a.dim() != b.dim() || std::abs(a.dt() - b.dt()) > kLatticeTol * a.dt() ||
      std::abs(a.t0() - b.t0()) > kLatticeTol * std::max(1.0, std::abs(a.t0())))
    fail(ErrorKind::GridMismatch, "signals are not on the same grid");
  std::vector<cplx> v(a.size() * a.dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < a.dim(); ++c) v[i * a.dim() + c] = a.row(i)[c] + scale_b * b.row(i)[c];
  auto ga = a.growth_exponent(), gb = b.growth_exponent();
  std::optional<int> g = (ga && gb) ? std::optional<int>(std::max(*ga, *gb)) : std::nullopt;
  return SampledSignal(a.domain(), a.t0(), a.dt(), a.dim(), std::move(v), g, false);
}

SampledSignal scale(const SampledSignal& a, cplx c) {
  std::vector<cplx> v = a.to_vector();
  for (auto& x : v) x *= c;
  return a.with_values(std::move(v));
}

}  // namespace redspec
