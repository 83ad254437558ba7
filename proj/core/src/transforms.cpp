#include <cmath>
#include <limits>

#include "redspec/error.hpp"
#include "redspec/spectra.hpp"
#include "fft.hpp"

namespace redspec {

namespace {

// Samples G(t_k), t_k = k dt, k = 0..count-1, read from f at i0 + dir*k.
struct Ray {
  const SampledSignal* f;
  std::size_t i0;
  int dir;
  std::size_t count;
  const cplx* row(std::size_t k) const {
    return f->row(dir > 0 ? i0 + k : i0 - k);
  }
};

Ray make_ray(const SampledSignal& f, int dir) {
  std::size_t i0;
  if (f.domain() == Domain::HalfLine) {
    i0 = 0;
  } else {
    auto z = f.index_of(0.0);
    if (!z) fail(ErrorKind::GridMismatch, "t = 0 is not a sample of the full-line record");
    i0 = *z;
  }
  if (dir < 0 && f.domain() == Domain::HalfLine) fail(ErrorKind::Domain, "left transform needs a full-line signal");
  std::size_t count = dir > 0 ? f.size() - i0 : i0 + 1;
  return Ray{&f, i0, dir, count};
}

// int_0^T e^{-(a + i w) t} G(t) dt by trapezoid.
void ray_sum(const Ray& r, double a, double w, double dt, cplx* out, std::size_t d) {
  for (std::size_t c = 0; c < d; ++c) out[c] = 0.0;
  if (r.count < 2) return;
  const cplx lam(a, w);
  const cplx z = std::exp(-lam * dt);
  cplx e = 1.0;
  for (std::size_t k = 0; k < r.count; ++k) {
    double wgt = (k == 0 || k + 1 == r.count) ? 0.5 : 1.0;
    const cplx* x = r.row(k);
    cplx ew = wgt * e;
    for (std::size_t c = 0; c < d; ++c) out[c] += ew * x[c];
    e *= z;
    if ((k & 4095) == 4095) e = std::exp(-lam * (static_cast<double>(k + 1) * dt));
  }
  for (std::size_t c = 0; c < d; ++c) out[c] *= dt;
}

// Trapezoid transform of a ray at a + i(s0 + j ds), j < m; out[j][c].
std::vector<std::vector<cplx>> ray_line(const Ray& r, double a, double s0, double ds, std::size_t m, double dt,
                                        std::size_t d) {
  std::vector<std::vector<cplx>> out(m, std::vector<cplx>(d, cplx{}));
  if (r.count < 2) return out;
  std::vector<cplx> x(r.count);
  for (std::size_t c = 0; c < d; ++c) {
    const double q = std::exp(-a * dt);
    double e = dt;
    for (std::size_t k = 0; k < r.count; ++k) {
      if ((k & 255) == 0) e = dt * std::exp(-a * static_cast<double>(k) * dt);
      double wgt = (k == 0 || k + 1 == r.count) ? 0.5 : 1.0;
      x[k] = wgt * e * r.row(k)[c];
      e *= q;
    }
    auto X = detail::chirp_z(x, dt, s0, ds, m);
    for (std::size_t j = 0; j < m; ++j) out[j][c] = X[j];
  }
  return out;
}

bool uniform(const std::vector<double>& s) {
  if (s.size() < 3) return false;
  double ds = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (std::abs(s[j] - (s.front() + static_cast<double>(j) * ds)) > 1e-9 * std::max(1.0, std::abs(ds) * s.size()))
      return false;
  return ds != 0.0;
}

double tail_bound(const Ray& r, double a, double dt, std::optional<int> growth) {
  if (!growth) fail(ErrorKind::Tail, "signal declares no growth bound; the transform tail is uncontrolled");
  const int k = *growth;
  const double T = static_cast<double>(r.count - 1) * dt;
  double C = 0.0;
  for (std::size_t j = (3 * r.count) / 4; j < r.count; ++j) {
    double t = static_cast<double>(j) * dt;
    double nrm = 0;
    const cplx* x = r.row(j);
    for (std::size_t c = 0; c < r.f->dim(); ++c) nrm += std::norm(x[c]);
    C = std::max(C, std::sqrt(nrm) / std::pow(1.0 + t * t, k));
  }
  double denom = a - (T > 0 ? 2.0 * k / T : 0.0);
  if (denom <= 0) return std::numeric_limits<double>::infinity();
  return C * std::exp(-a * T) * std::pow(1.0 + T * T, k) / denom;
}

}  // namespace

TransformValue laplace_transform(const SampledSignal& f, cplx lambda) {
  if (lambda.real() == 0.0) fail(ErrorKind::Domain, "transform undefined on the imaginary axis");
  if (lambda.real() < 0.0) fail(ErrorKind::Domain, "Laplace transform needs Re lambda > 0");
  Ray r = make_ray(f, +1);
  TransformValue v;
  v.value.resize(f.dim());
  ray_sum(r, lambda.real(), lambda.imag(), f.dt(), v.value.data(), f.dim());
  v.tail_bound = tail_bound(r, lambda.real(), f.dt(), f.growth_exponent());
  return v;
}

TransformValue carleman_transform(const SampledSignal& f, cplx lambda) {
  if (lambda.real() == 0.0) fail(ErrorKind::Domain, "transform undefined on the imaginary axis");
  if (lambda.real() > 0) return laplace_transform(f, lambda);
  TransformValue v;
  v.value.assign(f.dim(), cplx{});
  if (f.domain() == Domain::HalfLine) return v;  // zero extension: L- vanishes
  Ray r = make_ray(f, -1);
  // L- F(lambda) = -int_0^inf e^{lambda t} F(-t) dt
  ray_sum(r, -lambda.real(), -lambda.imag(), f.dt(), v.value.data(), f.dim());
  for (auto& x : v.value) x = -x;
  v.tail_bound = tail_bound(r, -lambda.real(), f.dt(), f.growth_exponent());
  return v;
}

HalfPlaneGrid half_plane_scan(const SampledSignal& f, const std::vector<double>& omegas,
                              const std::vector<double>& a_seq, Side side) {
  for (std::size_t k = 0; k < a_seq.size(); ++k) {
    if (!(a_seq[k] > 0)) fail(ErrorKind::Domain, "a_seq entries must be positive");
    if (k > 0 && !(a_seq[k] < a_seq[k - 1])) fail(ErrorKind::Domain, "a_seq must be strictly decreasing");
  }
  if (side != Side::Right && f.domain() != Domain::FullLine)
    fail(ErrorKind::Domain, "left half-plane values need a full-line signal");
  HalfPlaneGrid g;
  g.a_seq = a_seq;
  g.omegas = omegas;
  g.side = side;
  g.dim = f.dim();
  const std::size_t d = f.dim();
  g.values.assign(2, {});
  g.tail_bound.assign(a_seq.size(), 0.0);
  for (int s = 0; s < 2; ++s) {
    bool want = (s == 0 && side != Side::Left) || (s == 1 && side != Side::Right);
    if (!want) continue;
    Ray r = make_ray(f, s == 0 ? +1 : -1);
    auto& vs = g.values[static_cast<std::size_t>(s)];
    vs.assign(a_seq.size(), std::vector<std::vector<cplx>>(omegas.size(), std::vector<cplx>(d)));
    const bool fast = uniform(omegas);
    for (std::size_t k = 0; k < a_seq.size(); ++k) {
      g.tail_bound[k] = std::max(g.tail_bound[k], tail_bound(r, a_seq[k], f.dt(), f.growth_exponent()));
      if (fast) {
        const std::size_t m = omegas.size();
        const double ds = (omegas.back() - omegas.front()) / static_cast<double>(m - 1);
        double s0 = s == 0 ? omegas.front() : -omegas.front();
        vs[k] = ray_line(r, a_seq[k], s0, s == 0 ? ds : -ds, m, f.dt(), d);
        if (s == 1)
          for (auto& v : vs[k])
            for (auto& x : v) x = -x;
        continue;
      }
      for (std::size_t j = 0; j < omegas.size(); ++j) {
        double w = s == 0 ? omegas[j] : -omegas[j];
        ray_sum(r, a_seq[k], w, f.dt(), vs[k][j].data(), d);
        if (s == 1)
          for (auto& x : vs[k][j]) x = -x;
      }
    }
  }
  return g;
}

std::vector<std::vector<cplx>> laplace_line(const SampledSignal& f, double a, double s0, double ds, std::size_t m) {
  if (!(a > 0)) fail(ErrorKind::Domain, "Laplace transform needs Re lambda > 0");
  Ray r = make_ray(f, +1);
  return ray_line(r, a, s0, ds, m, f.dt(), f.dim());
}

double shift_identity_residual(const SampledSignal& f, double s, cplx lambda) {
  if (f.domain() != Domain::HalfLine) fail(ErrorKind::Domain, "shift identity is stated on the half-line");
  long m = f.steps(s);
  SampledSignal fs = translate(f, s);
  auto lf = laplace_transform(f, lambda).value;
  auto lfs = laplace_transform(fs, lambda).value;
  SampledSignal head = f.slice(0, static_cast<std::size_t>(m) + 1);
  SampledSignal head_h(Domain::HalfLine, 0.0, f.dt(), f.dim(), head.to_vector(), f.growth_exponent(), false);
  auto ih = laplace_transform(head_h, lambda).value;
  cplx e = std::exp(lambda * (static_cast<double>(m) * f.dt()));
  double r = 0;
  for (std::size_t c = 0; c < f.dim(); ++c) r += std::norm(lfs[c] - e * lf[c] + e * ih[c]);
  return std::sqrt(r);
}

double mollifier_identity_residual(const SampledSignal& f, double h, cplx lambda) {
  if (f.domain() != Domain::HalfLine) fail(ErrorKind::Domain, "mollifier identity is stated on the half-line");
  const long m = f.steps(h);
  const double dt = f.dt();
  const double hh = static_cast<double>(m) * dt;
  const std::size_t d = f.dim();
  SampledSignal mf = mollify(f, hh);
  auto lm = laplace_transform(mf, lambda).value;
  auto lf = laplace_transform(f, lambda).value;
  // Q(s) = int_0^s e^{-lambda t} F(t) dt on the lattice, then
  // corr = (1/h) int_0^h e^{lambda s} Q(s) ds and g = (1/h) int_0^h e^{lambda s} ds,
  // both with the trapezoid rule used everywhere else.
  std::vector<cplx> Q(static_cast<std::size_t>(m + 1) * d, cplx{});
  for (long i = 1; i <= m; ++i)
    for (std::size_t c = 0; c < d; ++c) {
      cplx a = std::exp(-lambda * (static_cast<double>(i - 1) * dt)) * f.row(static_cast<std::size_t>(i - 1))[c];
      cplx b = std::exp(-lambda * (static_cast<double>(i) * dt)) * f.row(static_cast<std::size_t>(i))[c];
      Q[static_cast<std::size_t>(i) * d + c] = Q[static_cast<std::size_t>(i - 1) * d + c] + 0.5 * dt * (a + b);
    }
  std::vector<cplx> corr(d, cplx{});
  cplx g = 0.0;
  for (long j = 0; j <= m; ++j) {
    double w = (j == 0 || j == m) ? 0.5 : 1.0;
    cplx e = std::exp(lambda * (static_cast<double>(j) * dt));
    g += w * e;
    for (std::size_t c = 0; c < d; ++c) corr[c] += w * e * Q[static_cast<std::size_t>(j) * d + c];
  }
  g *= dt / hh;
  for (auto& x : corr) x *= dt / hh;
  double r = 0;
  for (std::size_t c = 0; c < d; ++c) r += std::norm(lm[c] - g * lf[c] + corr[c]);
  return std::sqrt(r);
}

}  // namespace redspec
