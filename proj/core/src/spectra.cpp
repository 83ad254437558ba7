#include "redspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>
#include <unsupported/Eigen/FFT>

#include "redspec/error.hpp"

namespace redspec {

namespace {

constexpr const char* kKindNames[] = {"reduced", "beurling", "carleman", "laplace", "weak-laplace"};

std::shared_ptr<const TestKernel> baseband(double delta, double dt, double width) {
  static std::mutex mu;
  static std::map<std::tuple<long, long, long>, std::shared_ptr<const TestKernel>> cache;
  auto key = std::make_tuple(std::lround(delta * 1e9), std::lround(dt * 1e12), std::lround(width * 1e6));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  KernelSampling s;
  s.dt = dt;
  s.max_halfwidth = width;
  auto k = std::make_shared<const TestKernel>(bandpass_kernel(0.0, delta, s));
  cache.emplace(key, k);
  return k;
}

bool family_allowed(KernelFamily kernel, KernelFamily wanted) {
  return static_cast<int>(kernel) <= static_cast<int>(wanted);
}

bool modulated_class(FunctionClass c) {
  return c == FunctionClass::Ergodic || c == FunctionClass::ErgodicMeanZero;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  auto mid = v.begin() + static_cast<long>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

double vnorm(const std::vector<cplx>& v) {
  double s = 0;
  for (auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double vdist(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) s += std::norm(a[c] - b[c]);
  return std::sqrt(s);
}

ojson darr(const std::vector<double>& v) {
  ojson a = ojson::array();
  for (double x : v) a.push_back(x);
  return a;
}

// Half-plane values on a fine s-grid covering the frequency grid.
struct Scan {
  std::vector<double> s;
  HalfPlaneGrid g;
  bool has_left = false;
  double scale = 0.0;
  // norms[side][k][j], diffs[side][k][j] = ||V_k - V_{k-1}|| (k >= 1)
  std::vector<std::vector<std::vector<double>>> norms, diffs;
  std::vector<std::vector<double>> jumps;  // ||V+_k - V-_k||

  std::pair<std::size_t, std::size_t> window(double lo, double hi) const {
    auto a = std::lower_bound(s.begin(), s.end(), lo - 1e-12);
    auto b = std::upper_bound(s.begin(), s.end(), hi + 1e-12);
    return {static_cast<std::size_t>(a - s.begin()), static_cast<std::size_t>(b - s.begin())};
  }
  double wmax(const std::vector<double>& v, double w, double r) const {
    auto [i, j] = window(w - r, w + r);
    double m = 0;
    for (std::size_t q = i; q < j; ++q) m = std::max(m, v[q]);
    return m;
  }
  double at(const std::vector<double>& v, double w) const {
    auto it = std::lower_bound(s.begin(), s.end(), w);
    std::size_t q = static_cast<std::size_t>(it - s.begin());
    if (q > 0 && (q == s.size() || w - s[q - 1] < s[q] - w)) --q;
    return v[q];
  }
  double wint(const std::vector<double>& v, double w, double r) const {
    auto [i, j] = window(w - r, w + r);
    double acc = 0;
    for (std::size_t q = i + 1; q < j; ++q) acc += 0.5 * (v[q] + v[q - 1]) * (s[q] - s[q - 1]);
    return acc;
  }
};

void check_opts(const SpectrumOptions& o) {
  if (o.a_seq.size() < 3) fail(ErrorKind::Domain, "a_seq needs at least three entries");
  if (o.eps_seq.empty()) fail(ErrorKind::Domain, "eps_seq is empty");
  if (o.delta_seq.empty()) fail(ErrorKind::Domain, "delta_seq is empty");
}

Scan make_scan(const SampledSignal& f, const FrequencyGrid& grid, const SpectrumOptions& o, bool left) {
  check_opts(o);
  Scan sc;
  double a_min = *std::min_element(o.a_seq.begin(), o.a_seq.end());
  double step = a_min / 4.0;
  double pad = std::max(o.window, *std::max_element(o.eps_seq.begin(), o.eps_seq.end())) + step;
  double lo = grid.min - pad, hi = grid.max + pad;
  std::size_t n = static_cast<std::size_t>(std::ceil((hi - lo) / step)) + 1;
  for (std::size_t j = 0; j < n; ++j) sc.s.push_back(lo + static_cast<double>(j) * step);
  sc.has_left = left && f.domain() == Domain::FullLine;
  sc.g = half_plane_scan(f, sc.s, o.a_seq, sc.has_left ? Side::Both : Side::Right);
  const std::size_t K = o.a_seq.size();
  sc.norms.assign(2, std::vector<std::vector<double>>(K, std::vector<double>(n, 0.0)));
  sc.diffs = sc.norms;
  for (int side = 0; side < 2; ++side) {
    if (side == 1 && !sc.has_left) continue;
    auto& V = sc.g.values[static_cast<std::size_t>(side)];
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        sc.norms[side][k][j] = vnorm(V[k][j]);
        if (k > 0) sc.diffs[side][k][j] = vdist(V[k][j], V[k - 1][j]);
      }
  }
  if (left) {
    sc.jumps.assign(K, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t j = 0; j < n; ++j)
        sc.jumps[k][j] = sc.has_left ? vdist(sc.g.values[0][k][j], sc.g.values[1][k][j]) : sc.norms[0][k][j];
  }
  std::vector<double> last = sc.norms[0][K - 1];
  if (sc.has_left) last.insert(last.end(), sc.norms[1][K - 1].begin(), sc.norms[1][K - 1].end());
  sc.scale = median(last);
  return sc;
}

struct SideStats {
  std::vector<double> M, D;
  bool blowup = false;
  bool cauchy = false;
};

SideStats side_stats(const Scan& sc, int side, double w, const SpectrumOptions& o) {
  SideStats st;
  const std::size_t K = o.a_seq.size();
  for (std::size_t k = 0; k < K; ++k) {
    st.M.push_back(sc.wmax(sc.norms[side][k], w, o.window));
    if (k > 0) st.D.push_back(sc.at(sc.diffs[side][k], w));
  }
  double Ml = st.M.back(), M0 = st.M.front();
  // growth must dominate what the truncated record could contribute
  st.blowup = Ml > o.blowup_thresh * sc.scale && Ml > 2.0 * M0 && sc.g.tail_bound.back() <= 0.25 * Ml;
  double Dl = st.D.back(), Dp = st.D[st.D.size() - 2];
  st.cauchy = Dl <= o.tol_match * sc.scale || Dl <= 0.75 * Dp;
  return st;
}

// Cauchy-integral reconstruction of L F at a/2 + i w from the circle of radius
// r a around a + i w, for every grid w; returns the reconstruction error per point.
std::vector<double> disk_errors(const SampledSignal& f, double a, const FrequencyGrid& grid, const SpectrumOptions& o) {
  const std::size_t m = grid.size();
  const double r = o.disk_radius * a;
  const int N = o.disk_nodes;
  const cplx z0_off(-a / 2, 0.0);  // z0 - c
  std::vector<std::vector<cplx>> rec(m, std::vector<cplx>(f.dim(), cplx{}));
  for (int j = 0; j < N; ++j) {
    cplx off = r * std::polar(1.0, 2.0 * std::numbers::pi * j / N);  // z - c
    auto v = laplace_line(f, a + off.real(), grid.min + off.imag(), grid.step, m);
    cplx wgt = off / (off - z0_off) / static_cast<double>(N);
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t c = 0; c < f.dim(); ++c) rec[q][c] += wgt * v[q][c];
  }
  auto direct = laplace_line(f, a / 2, grid.min, grid.step, m);
  std::vector<double> err(m);
  for (std::size_t q = 0; q < m; ++q) err[q] = vdist(rec[q], direct[q]);
  return err;
}

// Share of the spectral energy of a demodulated output lying in [-delta, delta],
// where the band-pass transform equals one. Tail only unless whole is set.
double plateau_fraction(const SampledSignal& g, double delta, bool whole) {
  std::size_t i0 = whole ? 0 : g.size() / 2;
  std::size_t n = g.size() - i0;
  if (n < 8) return 0.0;
  std::size_t N = 1;
  while (N < 2 * n) N <<= 1;
  Eigen::FFT<double> fft;
  double inside = 0.0, total = 0.0;
  for (std::size_t c = 0; c < g.dim(); ++c) {
    std::vector<cplx> x(N, cplx{}), X;
    for (std::size_t i = 0; i < n; ++i) {
      double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n));
      x[i] = w * g.row(i0 + i)[c];
    }
    fft.fwd(X, x);
    for (std::size_t k = 0; k < N; ++k) {
      long kk = k < N / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(N);
      double eta = 2.0 * std::numbers::pi * static_cast<double>(kk) / (static_cast<double>(N) * g.dt());
      double e = std::norm(X[k]);
      total += e;
      if (std::abs(eta) <= delta) inside += e;
    }
  }
  return total > 0 ? inside / total : 0.0;
}

SpectrumEstimate start(SpectrumKind kind, const FrequencyGrid& grid) {
  SpectrumEstimate e;
  e.kind = kind;
  e.grid = grid;
  e.certificates.reserve(grid.size());
  return e;
}

}  // namespace

FrequencyGrid::FrequencyGrid(double lo, double hi, double st) : min(lo), max(hi), step(st) {
  if (!(st > 0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
    fail(ErrorKind::Usage, "frequency grid needs min <= max and step > 0");
  if (size() < 3) fail(ErrorKind::Usage, "frequency grid must cover at least three points");
}

std::size_t FrequencyGrid::size() const noexcept {
  return static_cast<std::size_t>(std::floor((max - min) / step + 1e-9)) + 1;
}

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> p(size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = at(j);
  return p;
}

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Regular: return "regular";
    case Status::Singular: return "singular";
    case Status::Undecided: return "undecided";
  }
  return "?";
}

int status_code(Status s) noexcept { return static_cast<int>(s); }

const char* to_string(SpectrumKind k) noexcept { return kKindNames[static_cast<int>(k)]; }

std::optional<SpectrumKind> parse_kind(const std::string& s) {
  for (int i = 0; i < 5; ++i)
    if (s == kKindNames[i]) return static_cast<SpectrumKind>(i);
  if (s == "wl" || s == "weak_laplace") return SpectrumKind::WeakLaplace;
  return std::nullopt;
}

std::optional<KernelFamily> parse_family(const std::string& s) {
  if (s == "D" || s == "d") return KernelFamily::D;
  if (s == "S" || s == "s") return KernelFamily::S;
  if (s == "L1" || s == "l1") return KernelFamily::L1;
  return std::nullopt;
}

ojson RegularityCertificate::to_json() const {
  ojson j;
  j["omega"] = omega;
  j["status"] = to_string(status);
  j["kernel"] = kernel_id;
  j["delta"] = delta;
  j["metric"] = metric;
  j["reason"] = reason;
  j["evidence"] = evidence;
  return j;
}

std::vector<double> SpectrumEstimate::singular_set() const {
  std::vector<double> v;
  for (auto& c : certificates)
    if (c.status == Status::Singular) v.push_back(c.omega);
  return v;
}

Status SpectrumEstimate::status_at(double omega) const {
  if (certificates.empty()) return Status::Undecided;
  std::size_t best = 0;
  for (std::size_t j = 1; j < certificates.size(); ++j)
    if (std::abs(certificates[j].omega - omega) < std::abs(certificates[best].omega - omega)) best = j;
  return certificates[best].status;
}

std::size_t SpectrumEstimate::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(certificates.begin(), certificates.end(), [s](auto& c) { return c.status == s; }));
}

std::string SpectrumEstimate::label() const {
  std::string l = to_string(kind);
  if (kind == SpectrumKind::Reduced && cls) l += std::string("/") + to_string(*cls);
  if (kind == SpectrumKind::Reduced && family) l += std::string("/") + to_string(*family);
  return l;
}

ojson SpectrumEstimate::to_json() const {
  ojson j;
  j["kind"] = to_string(kind);
  j["class"] = cls ? ojson(to_string(*cls)) : ojson(nullptr);
  j["family"] = family ? ojson(to_string(*family)) : ojson(nullptr);
  j["grid"] = ojson{{"min", grid.min}, {"max", grid.max}, {"step", grid.step}};
  ojson st = ojson::array();
  ojson ev = ojson::array();
  for (auto& c : certificates) {
    st.push_back(to_string(c.status));
    ev.push_back(c.to_json());
  }
  j["status"] = st;
  j["singular"] = darr(singular_set());
  j["evidence"] = ev;
  return j;
}

RegularityCertificate test_regular(const SampledSignal& f, double omega, FunctionClass cls, KernelFamily family,
                                   const SpectrumOptions& opts) {
  check_opts(opts);
  RegularityCertificate cert;
  cert.omega = omega;
  const double scale = signal_scale(f);
  const double dt = f.dt();
  const std::size_t stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(opts.output_step / dt)));
  ojson attempts = ojson::array();
  bool any = false, all_no = true;
  double last_metric = 0.0;
  Tri last_member = Tri::Undecided;
  double localized = -1.0;

  auto judge = [&](const SampledSignal& out, double err, std::optional<Interval> band, const std::string& kid,
                   double delta) -> bool {
    DetectOptions d;
    d.tol = opts.tol;
    d.scale = scale;
    d.error_bound = err;
    d.bohr_band = band;
    ClassReport r = detect(out, cls, d);
    attempts.push_back(ojson{{"kernel", kid}, {"delta", delta}, {"report", r.to_json()}});
    any = true;
    last_member = r.member;
    if (r.member != Tri::No) all_no = false;
    last_metric = r.member == Tri::No ? r.witness_value / (scale > 0 ? scale : 1.0) : 0.0;
    if (r.member == Tri::Yes) {
      cert.status = Status::Regular;
      cert.kernel_id = kid;
      cert.delta = delta;
      cert.reason = std::string("kernel output is ") + to_string(cls);
      return true;
    }
    return false;
  };
  auto note_error = [&](const std::string& kid, const Error& e) {
    attempts.push_back(ojson{{"kernel", kid}, {"error", e.what()}});
    all_no = false;
  };

  bool done = false;
  if (opts.use_ladder && family != KernelFamily::D) {
    SampledSignal g = omega == 0.0 ? f : modulate(f, -omega);
    const double delta_min = *std::min_element(opts.delta_seq.begin(), opts.delta_seq.end());
    for (double delta : opts.delta_seq) {
      std::string kid = "bandpass(" + std::to_string(omega) + "," + std::to_string(delta) + ")";
      try {
        auto k = baseband(delta, dt, opts.bandpass_width / delta);
        ConvolveOptions co;
        co.stride = stride;
        co.t_lo = f.t0();
        ConvolvedSignal conv = convolve(ExtendedSignal(g, g.t0()), *k, co);
        SampledSignal out = conv.restrict_to_origin();
        if (modulated_class(cls)) out = modulate(out, omega);
        Interval band = modulated_class(cls) ? Interval{omega - 2 * delta, omega + 2 * delta}
                                             : Interval{-2 * delta, 2 * delta};
        if (judge(out, conv.error_bound, band, kid, delta)) {
          done = true;
          break;
        }
        if (last_member == Tri::No && delta == delta_min)
          localized = plateau_fraction(conv.restrict_to_origin(), delta, cls == FunctionClass::Zero);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Horizon && e.kind() != ErrorKind::Growth) throw;
        note_error(kid, e);
      }
    }
  }
  for (std::size_t q = 0; !done && q < opts.extra_kernels.size(); ++q) {
    TestKernel k;
    try {
      k = opts.extra_kernels[q](omega, dt);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Division || e.kind() == ErrorKind::Domain) continue;
      throw;
    }
    if (!family_allowed(k.family(), family)) continue;
    if (std::abs(k.ft(omega)) < 0.5) continue;
    try {
      ConvolveOptions co;
      co.stride = stride;
      co.t_lo = f.t0();
      ConvolvedSignal conv = convolve(ExtendedSignal(f, f.t0()), k, co);
      SampledSignal out = conv.restrict_to_origin();
      Interval band = k.ft_support().bounded() ? k.ft_support() : Interval{omega - 2, omega + 2};
      if (judge(out, conv.error_bound, band, k.id(), 0.0)) done = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Horizon && e.kind() != ErrorKind::Growth) throw;
      note_error(k.id(), e);
    }
  }
  if (!done) {
    if (any && all_no && localized >= 0.5) {
      cert.status = Status::Singular;
      cert.reason = std::string("every admissible kernel leaves a non-") + to_string(cls) + " output";
    } else {
      cert.status = Status::Undecided;
      cert.reason = !any ? "no admissible kernel"
                    : (all_no && localized >= 0) ? "non-membership not localized on the kernel plateau"
                                                 : "no kernel certified membership";
    }
    cert.metric = last_metric;
  } else {
    cert.metric = cert.delta;
  }
  cert.evidence = ojson{{"scale", scale}, {"attempts", attempts}};
  if (localized >= 0) cert.evidence["plateau_fraction"] = localized;
  return cert;
}

SpectrumEstimate reduced_spectrum(const SampledSignal& f, FunctionClass cls, KernelFamily family,
                                  const FrequencyGrid& grid, const SpectrumOptions& opts) {
  SpectrumEstimate e = start(SpectrumKind::Reduced, grid);
  e.cls = cls;
  e.family = family;
  for (double w : grid.points()) e.certificates.push_back(test_regular(f, w, cls, family, opts));
  return e;
}

SpectrumEstimate beurling_spectrum(const SampledSignal& f, const FrequencyGrid& grid, const SpectrumOptions& opts) {
  SpectrumEstimate e = reduced_spectrum(f, FunctionClass::Zero, KernelFamily::L1, grid, opts);
  e.kind = SpectrumKind::Beurling;
  return e;
}

SpectrumEstimate laplace_spectrum(const SampledSignal& f, const FrequencyGrid& grid, const SpectrumOptions& opts) {
  SpectrumEstimate e = start(SpectrumKind::Laplace, grid);
  Scan sc = make_scan(f, grid, opts, false);
  const std::size_t K = opts.a_seq.size();
  std::vector<std::vector<double>> disk_err;
  for (std::size_t k = K - 2; k < K; ++k) disk_err.push_back(disk_errors(f, opts.a_seq[k], grid, opts));
  const auto pts = grid.points();
  for (std::size_t q = 0; q < pts.size(); ++q) {
    const double w = pts[q];
    RegularityCertificate c;
    c.omega = w;
    SideStats st = side_stats(sc, 0, w, opts);
    std::vector<double> disk;
    bool disk_ok = true;
    for (auto& de : disk_err) {
      disk.push_back(de[q]);
      disk_ok = disk_ok && de[q] <= opts.tol_analytic * sc.scale;
    }
    if (st.blowup) {
      c.status = Status::Singular;
      c.reason = "transform grows without bound towards the axis";
    } else if (st.cauchy && disk_ok) {
      c.status = Status::Regular;
      c.reason = "boundary values converge and extend holomorphically";
    } else {
      c.status = Status::Undecided;
      c.reason = st.cauchy ? "holomorphic reconstruction failed" : "boundary values do not settle";
    }
    c.metric = sc.scale > 0 ? st.M.back() / sc.scale : 0.0;
    c.evidence = ojson{{"scale", sc.scale}, {"a", darr(opts.a_seq)}, {"M", darr(st.M)}, {"D", darr(st.D)},
                       {"disk_error", darr(disk)}, {"tail_bound", sc.g.tail_bound.back()}};
    e.certificates.push_back(std::move(c));
  }
  return e;
}

SpectrumEstimate carleman_spectrum(const SampledSignal& f, const FrequencyGrid& grid, const SpectrumOptions& opts) {
  SpectrumEstimate e = start(SpectrumKind::Carleman, grid);
  Scan sc = make_scan(f, grid, opts, true);
  for (double w : grid.points()) {
    RegularityCertificate c;
    c.omega = w;
    SideStats r = side_stats(sc, 0, w, opts);
    SideStats l;
    if (sc.has_left) {
      l = side_stats(sc, 1, w, opts);
    } else {
      l.M.assign(r.M.size(), 0.0);
      l.D.assign(r.D.size(), 0.0);
      l.cauchy = true;
    }
    std::vector<double> J;
    for (auto& jk : sc.jumps) J.push_back(sc.at(jk, w));
    double Jl = J.back(), Jp = J[J.size() - 2];
    double small = opts.tol_match * sc.scale;
    bool persist = Jl >= 0.9 * Jp && Jl > 10.0 * small && sc.g.tail_bound.back() <= 0.25 * Jl;
    bool settled = Jl <= small || Jl <= 0.75 * Jp;
    if (r.blowup || l.blowup || persist) {
      c.status = Status::Singular;
      c.reason = (r.blowup || l.blowup) ? "transform grows without bound towards the axis"
                                        : "the two boundary values differ";
    } else if (r.cauchy && l.cauchy && settled) {
      c.status = Status::Regular;
      c.reason = "boundary values from both sides converge and agree";
    } else {
      c.status = Status::Undecided;
      c.reason = "boundary values do not settle";
    }
    c.metric = sc.scale > 0 ? Jl / sc.scale : 0.0;
    c.evidence = ojson{{"scale", sc.scale}, {"a", darr(opts.a_seq)}, {"M_right", darr(r.M)},
                       {"M_left", darr(l.M)},  {"jump", darr(J)},        {"tail_bound", sc.g.tail_bound.back()}};
    e.certificates.push_back(std::move(c));
  }
  return e;
}

SpectrumEstimate weak_laplace_spectrum(const SampledSignal& f, const FrequencyGrid& grid,
                                       const SpectrumOptions& opts) {
  SpectrumEstimate e = start(SpectrumKind::WeakLaplace, grid);
  Scan sc = make_scan(f, grid, opts, false);
  const std::size_t K = opts.a_seq.size();
  for (double w : grid.points()) {
    RegularityCertificate c;
    c.omega = w;
    int regular = 0, singular = 0;
    ojson per_eps = ojson::array();
    double metric = 0.0;
    for (double eps : opts.eps_seq) {
      std::vector<double> N, L;
      for (std::size_t k = 0; k < K; ++k) {
        N.push_back(sc.wint(sc.norms[0][k], w, eps));
        if (k > 0) L.push_back(sc.wint(sc.diffs[0][k], w, eps));
      }
      double Ll = L.back(), Lp = L[L.size() - 2];
      double small = opts.tol_match * sc.scale * 2.0 * eps;
      bool reg = Ll <= 0.75 * Lp || Ll <= small;
      bool sing = !reg && Ll >= 0.9 * Lp && N.back() > N[N.size() - 2] && Ll > small &&
                  sc.g.tail_bound.back() * 2.0 * eps <= 0.25 * Ll;
      regular += reg;
      singular += sing;
      metric = std::max(metric, Lp > 0 ? Ll / Lp : 0.0);
      per_eps.push_back(ojson{{"eps", eps}, {"N", darr(N)}, {"L", darr(L)}});
    }
    const int n = static_cast<int>(opts.eps_seq.size());
    if (regular == n) {
      c.status = Status::Regular;
      c.reason = "windowed boundary values converge in L1";
    } else if (singular == n) {
      c.status = Status::Singular;
      c.reason = "windowed L1 norms keep growing";
    } else {
      c.status = Status::Undecided;
      c.reason = "window sizes disagree";
    }
    c.metric = metric;
    c.evidence = ojson{{"scale", sc.scale}, {"a", darr(opts.a_seq)}, {"windows", per_eps}};
    e.certificates.push_back(std::move(c));
  }
  return e;
}

SpectrumComparison compare_spectra(const SpectrumEstimate& a, const SpectrumEstimate& b) {
  SpectrumComparison r;
  std::size_t n = std::min(a.certificates.size(), b.certificates.size());
  for (std::size_t j = 0; j < n; ++j) {
    Status x = a.certificates[j].status, y = b.certificates[j].status;
    if (x == Status::Undecided || y == Status::Undecided) ++r.undecided;
    else if (x == y) ++r.agree;
    else ++r.disagree;
  }
  return r;
}

}  // namespace redspec
