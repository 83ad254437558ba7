#include "redspec/convolution.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "redspec/error.hpp"

namespace redspec {

namespace {

struct OutputGrid {
  long j0 = 0;  // first base-relative index
  std::size_t count = 0;
  std::size_t stride = 1;
};

OutputGrid output_grid(const ExtendedSignal& h, const ConvolveOptions& opts) {
  const SampledSignal& b = h.base();
  const double dt = b.dt();
  double lo = opts.t_lo.value_or(h.t_min());
  double hi = opts.t_hi.value_or(h.t_end());
  if (hi < lo) fail(ErrorKind::Horizon, "empty convolution output range");
  long jlo = static_cast<long>(std::ceil((lo - b.t0()) / dt - 1e-9));
  long jhi = static_cast<long>(std::floor((hi - b.t0()) / dt + 1e-9));
  OutputGrid g;
  g.stride = std::max<std::size_t>(1, opts.stride);
  long s = static_cast<long>(g.stride);
  double q = b.t0() / dt;
  long g0 = std::abs(q - std::round(q)) <= kLatticeTol * std::max(1.0, std::abs(q)) ? std::lround(q) : -jlo;
  long r = ((g0 + jlo) % s + s) % s;
  g.j0 = r == 0 ? jlo : jlo + (s - r);
  if (g.j0 > jhi) fail(ErrorKind::Horizon, "convolution output range holds no lattice point");
  g.count = static_cast<std::size_t>((jhi - g.j0) / s + 1);
  return g;
}

ConvolvedSignal finish(const ExtendedSignal& h, const OutputGrid& g, std::vector<cplx> v,
                       std::vector<std::uint8_t> trunc, double err) {
  const SampledSignal& b = h.base();
  ConvolvedSignal out;
  double t0 = b.t0() + static_cast<double>(g.j0) * b.dt();
  out.signal = SampledSignal(Domain::FullLine, t0, b.dt() * static_cast<double>(g.stride), b.dim(),
                             std::move(v), b.growth_exponent(), false);
  out.truncated = std::move(trunc);
  out.error_bound = err;
  out.origin = h.origin_domain();
  return out;
}

bool prefer_fft(std::size_t outputs, long M, std::size_t n) {
  double direct = static_cast<double>(outputs) * static_cast<double>(2 * M + 1);
  double m = static_cast<double>(n) + static_cast<double>(2 * M);
  return direct > 12.0 * m * std::log2(std::max(2.0, m));
}

}  // namespace

std::size_t ConvolvedSignal::truncated_count() const {
  return static_cast<std::size_t>(std::count(truncated.begin(), truncated.end(), 1));
}

SampledSignal ConvolvedSignal::valid() const {
  std::size_t best_lo = 0, best_len = 0, cur_lo = 0, cur_len = 0;
  for (std::size_t i = 0; i < truncated.size(); ++i) {
    if (truncated[i]) {
      cur_len = 0;
      continue;
    }
    if (cur_len == 0) cur_lo = i;
    ++cur_len;
    if (cur_len > best_len) {
      best_len = cur_len;
      best_lo = cur_lo;
    }
  }
  if (best_len == 0) fail(ErrorKind::Horizon, "every convolution sample is truncated");
  return signal.slice(best_lo, best_len);
}

SampledSignal ConvolvedSignal::restrict_to_origin() const {
  SampledSignal v = valid();
  if (origin == Domain::FullLine) return v;
  const double tol = 1e-9 * v.dt();
  std::size_t i0 = 0;
  while (i0 < v.size() && v.time(i0) < -tol) ++i0;
  if (i0 >= v.size()) fail(ErrorKind::Horizon, "no valid convolution samples on the half-line");
  SampledSignal s = v.slice(i0, v.size() - i0);
  if (std::abs(s.t0()) > tol) return s;
  return SampledSignal(Domain::HalfLine, 0.0, s.dt(), s.dim(), s.to_vector(), s.growth_exponent(), false);
}

ConvolvedSignal convolve(const ExtendedSignal& h, const TestKernel& kin, const ConvolveOptions& opts) {
  const SampledSignal& b = h.base();
  const double dt = b.dt();
  const TestKernel k = std::abs(kin.samples().dt() - dt) > kLatticeTol * dt ? kin.at_dt(dt) : kin;
  const long M = k.half_steps();
  const cplx* ker = k.samples().row(0);
  const OutputGrid g = output_grid(h, opts);
  const std::size_t d = b.dim();
  const long last = h.last_known();
  const bool half = h.origin_domain() == Domain::HalfLine;

  std::vector<cplx> v(g.count * d, cplx{});
  std::vector<std::uint8_t> trunc(g.count, 0);
  if (last >= 0 && prefer_fft(g.count, M, static_cast<std::size_t>(last + 1))) {
    const std::size_t n = static_cast<std::size_t>(last + 1);
    std::vector<cplx> x(n);
    for (std::size_t c = 0; c < d; ++c) {
      for (std::size_t i = 0; i < n; ++i) x[i] = b.row(i)[c];
      if (half) x[0] *= 0.5;
      std::vector<cplx> y = detail::fft_linear(x, ker, static_cast<std::size_t>(2 * M + 1));
      for (std::size_t o = 0; o < g.count; ++o) {
        long j = g.j0 + static_cast<long>(o * g.stride);
        long idx = j + M;
        cplx s = (idx >= 0 && idx < static_cast<long>(y.size())) ? y[static_cast<std::size_t>(idx)] : cplx{};
        // the jump weight differs at the two kernel ends
        if (half && idx == 0) s -= 0.5 * ker[0] * b.row(0)[c];
        if (half && idx == 2 * M) s += 0.5 * ker[2 * M] * b.row(0)[c];
        v[o * d + c] = s * dt;
      }
    }
    for (std::size_t o = 0; o < g.count; ++o) {
      long j = g.j0 + static_cast<long>(o * g.stride);
      if (j + M > last || (j - M < 0 && !half)) trunc[o] = 1;
    }
    double err = k.cut_mass() * b.sup_norm();
    return finish(h, g, std::move(v), std::move(trunc), err);
  }
  std::vector<cplx> acc(d);
  for (std::size_t o = 0; o < g.count; ++o) {
    long j = g.j0 + static_cast<long>(o * g.stride);
    // input index i = j + M - m for kernel index m in [0, 2M]
    long m_lo = std::max(0L, j + M - last);
    long m_hi = std::min(2 * M, j + M);
    if (j + M > last) trunc[o] = 1;
    if (j - M < 0 && !half) trunc[o] = 1;
    std::fill(acc.begin(), acc.end(), cplx{});
    if (half) {
      // Rows with i < 0 are zero; i == 0 carries the jump of the zero extension.
      long mj = j + M;  // kernel index hitting i == 0
      long top = std::min(m_hi, mj - 1);
      for (long m = m_lo; m <= top; ++m) {
        const cplx* x = b.row(static_cast<std::size_t>(j + M - m));
        for (std::size_t c = 0; c < d; ++c) acc[c] += ker[m] * x[c];
      }
      if (mj >= m_lo && mj <= 2 * M) {
        double w = mj == 2 * M ? 1.0 : (mj == 0 ? 0.0 : 0.5);
        const cplx* x = b.row(0);
        for (std::size_t c = 0; c < d; ++c) acc[c] += w * ker[mj] * x[c];
      }
    } else {
      if (j - M < 0) m_hi = std::min(m_hi, j + M);
      for (long m = m_lo; m <= m_hi; ++m) {
        const cplx* x = b.row(static_cast<std::size_t>(j + M - m));
        for (std::size_t c = 0; c < d; ++c) acc[c] += ker[m] * x[c];
      }
    }
    for (std::size_t c = 0; c < d; ++c) v[o * d + c] = acc[c] * dt;
  }
  double err = k.cut_mass() * b.sup_norm();
  return finish(h, g, std::move(v), std::move(trunc), err);
}

ConvolvedSignal convolve(const ExtendedSignal& h, const BoxKernel& k, const ConvolveOptions& opts) {
  const SampledSignal& b = h.base();
  const double dt = b.dt();
  const long mh = b.steps(k.h());
  if (mh <= 0) fail(ErrorKind::GridMismatch, "box width below dt");
  const OutputGrid g = output_grid(h, opts);
  const std::size_t d = b.dim();
  const long last = h.last_known();
  const bool half = h.origin_domain() == Domain::HalfLine;
  const double hh = static_cast<double>(mh) * dt;

  std::vector<cplx> v(g.count * d, cplx{});
  std::vector<std::uint8_t> trunc(g.count, 0);
  for (std::size_t o = 0; o < g.count; ++o) {
    long j = g.j0 + static_cast<long>(o * g.stride);
    // (1/h) int_t^{t+h}: input indices j .. j + mh
    if (j + mh > last || (j < 0 && !half)) trunc[o] = 1;
    long lo = std::max(j, 0L);
    long hi = std::min(j + mh, last);
    for (long i = lo; i <= hi; ++i) {
      double w = (i == j || i == j + mh) ? 0.5 : 1.0;
      if (half && i == 0) {
        if (i == j) w = 0.5;             // window starts at the jump: right limit
        else if (i == j + mh) w = 0.0;   // window ends at the jump: left limit
        else w = 0.5;                    // interior jump: midpoint value
      }
      const cplx* x = b.row(static_cast<std::size_t>(i));
      for (std::size_t c = 0; c < d; ++c) v[o * d + c] += w * x[c];
    }
    for (std::size_t c = 0; c < d; ++c) v[o * d + c] *= dt / hh;
  }
  return finish(h, g, std::move(v), std::move(trunc), 0.0);
}

SampledSignal convolve_restricted(const SampledSignal& f, const TestKernel& k, std::size_t stride,
                                  double* error_bound) {
  ExtendedSignal ext(f, f.t0());
  ConvolveOptions o;
  o.stride = stride;
  o.t_lo = f.t0();
  ConvolvedSignal c = convolve(ext, k, o);
  if (error_bound) *error_bound = c.error_bound;
  return c.restrict_to_origin();
}

}  // namespace redspec
