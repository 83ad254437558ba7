#include "fft.hpp"

#include <algorithm>
#include <memory>
#include <tuple>
#include <unsupported/Eigen/FFT>

namespace redspec::detail {

namespace {

// Plans are cached per size inside Eigen::FFT, so keep one instance per thread.
Eigen::FFT<double>& engine() {
  thread_local Eigen::FFT<double> fft;
  return fft;
}

// e^{i th k^2} for k < n by the recurrence e^{i th (k+1)^2} = e^{i th k^2} e^{i th (2k+1)},
// resynchronized with a direct evaluation every 256 steps.
void quadratic_phase(double th, std::size_t n, std::vector<cplx>& out) {
  out.resize(n);
  cplx w = 1.0, r = std::polar(1.0, th), r2 = std::polar(1.0, 2.0 * th);
  for (std::size_t k = 0; k < n; ++k) {
    if ((k & 255) == 0) {
      double kk = static_cast<double>(k);
      w = std::polar(1.0, th * kk * kk);
      r = std::polar(1.0, th * (2.0 * kk + 1.0));
    }
    out[k] = w;
    w *= r;
    r *= r2;
  }
}

struct ChirpFilter {
  std::size_t n, m, L;
  double th;
  std::vector<cplx> B;       // transform of the chirp filter
  std::vector<cplx> phase;   // e^{-i th k^2}, k < max(n, m)
};

const ChirpFilter& chirp_filter(std::size_t n, std::size_t m, std::size_t L, double th) {
  thread_local std::vector<std::unique_ptr<ChirpFilter>> cache;
  for (auto& c : cache)
    if (c->n == n && c->m == m && c->L == L && c->th == th) return *c;
  auto f = std::make_unique<ChirpFilter>(ChirpFilter{n, m, L, th, {}, {}});
  std::vector<cplx> q;
  quadratic_phase(th, std::max(n, m), q);
  std::vector<cplx> b(L, cplx{});
  for (std::size_t l = 0; l < m; ++l) b[l] = q[l];
  for (std::size_t l = 1; l < n; ++l) b[L - l] = q[l];
  engine().fwd(f->B, b);
  f->phase.resize(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) f->phase[k] = std::conj(q[k]);
  if (cache.size() >= 8) cache.erase(cache.begin());
  cache.push_back(std::move(f));
  return *cache.back();
}

}  // namespace

std::vector<cplx> fft_linear(const std::vector<cplx>& x, const cplx* ker, std::size_t nk) {
  std::size_t n = 1;
  while (n < x.size() + nk - 1) n <<= 1;
  auto& fft = engine();
  std::vector<cplx> a(n, cplx{}), b(n, cplx{}), A, B, y;
  std::copy(x.begin(), x.end(), a.begin());
  std::copy(ker, ker + nk, b.begin());
  fft.fwd(A, a);
  fft.fwd(B, b);
  for (std::size_t i = 0; i < n; ++i) A[i] *= B[i];
  fft.inv(y, A);
  y.resize(x.size() + nk - 1);
  return y;
}

std::vector<cplx> chirp_z(const std::vector<cplx>& x, double dt, double s0, double ds, std::size_t m) {
  const std::size_t n = x.size();
  std::size_t L = 1;
  while (L < n + m - 1) L <<= 1;
  const double th = 0.5 * ds * dt;
  const ChirpFilter& cf = chirp_filter(n, m, L, th);
  std::vector<cplx> a(L, cplx{}), A, c;
  // e^{-i s0 k dt} by recurrence, resynchronized every 256 steps
  const cplx z = std::polar(1.0, -s0 * dt);
  cplx e = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if ((k & 255) == 0) e = std::polar(1.0, -s0 * static_cast<double>(k) * dt);
    a[k] = x[k] * e * cf.phase[k];
    e *= z;
  }
  auto& fft = engine();
  fft.fwd(A, a);
  for (std::size_t i = 0; i < L; ++i) A[i] *= cf.B[i];
  fft.inv(c, A);
  std::vector<cplx> X(m);
  for (std::size_t j = 0; j < m; ++j) X[j] = c[j] * cf.phase[j];
  return X;
}

}  // namespace redspec::detail
