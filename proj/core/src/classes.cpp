#include "redspec/classes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "redspec/error.hpp"

namespace redspec {

namespace {

constexpr const char* kClassNames[] = {"zero", "c0", "bounded", "uc", "ergodic", "ergodic-mean-zero",
                                       "ap", "aap", "slowly-oscillating"};

double tau(double tol, double scale, double err) { return tol * scale + err; }

double ref_scale(const SampledSignal& f, const DetectOptions& o) {
  return o.scale ? *o.scale : signal_scale(f);
}

// Largest |t| reached by the record on the side(s) that count as tails.
double reach(const SampledSignal& f) {
  if (f.domain() == Domain::HalfLine || f.t0() >= 0) return f.t_end();
  if (f.t_end() <= 0) return -f.t0();
  return std::min(-f.t0(), f.t_end());
}

ClassReport make(FunctionClass c, const DetectOptions& o, double scale) {
  ClassReport r;
  r.cls = c;
  r.tolerances = ojson{{"tol_c0", o.tol.tol_c0},       {"tol_erg", o.tol.tol_erg},
                       {"tol_bohr", o.tol.tol_bohr},   {"tol_uc", o.tol.tol_uc},
                       {"scale", scale},               {"error_bound", o.error_bound}};
  return r;
}

void set_no(ClassReport& r, double t, double v, std::string why) {
  r.member = Tri::No;
  r.witness_t = t;
  r.witness_value = v;
  r.reason = std::move(why);
}

// Prefix trapezoid integral, per component.
std::vector<cplx> prefix(const SampledSignal& f) {
  std::size_t n = f.size(), d = f.dim();
  std::vector<cplx> p(n * d, cplx{});
  double h = 0.5 * f.dt();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t c = 0; c < d; ++c)
      p[i * d + c] = p[(i - 1) * d + c] + h * (f.row(i - 1)[c] + f.row(i)[c]);
  return p;
}

ojson cvec(const std::vector<cplx>& v) {
  ojson a = ojson::array();
  for (auto& x : v) a.push_back(ojson::array({x.real(), x.imag()}));
  return a;
}

}  // namespace

const char* to_string(FunctionClass c) noexcept { return kClassNames[static_cast<int>(c)]; }

const char* to_string(Tri t) noexcept {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Undecided: return "undecided";
  }
  return "?";
}

std::optional<FunctionClass> parse_class(const std::string& s) {
  for (int i = 0; i < 9; ++i)
    if (s == kClassNames[i]) return static_cast<FunctionClass>(i);
  if (s == "C0" || s == "C₀") return FunctionClass::C0;
  if (s == "so") return FunctionClass::SlowlyOscillating;
  if (s == "e0" || s == "ergodic0") return FunctionClass::ErgodicMeanZero;
  return std::nullopt;
}

ojson ClassReport::to_json() const {
  ojson ev = evidence;
  if (witness_t) ev["witness"] = ojson{{"t", *witness_t}, {"value", witness_value}};
  if (!reason.empty()) ev["reason"] = reason;
  return ojson{{"class", to_string(cls)}, {"member", to_string(member)}, {"evidence", ev},
               {"tolerances", tolerances}};
}

double BohrCoefficient::norm() const noexcept {
  double s = 0;
  for (auto& x : a) s += std::norm(x);
  return std::sqrt(s);
}

double signal_scale(const SampledSignal& f) {
  if (f.growth_exponent() && *f.growth_exponent() == 0) return f.sup_norm();
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) v[i] = f.norm_at(i);
  auto mid = v.begin() + static_cast<long>(v.size() / 2);
  std::nth_element(v.begin(), mid, v.end());
  return *mid;
}

std::vector<double> tail_sup(const SampledSignal& f, const std::vector<double>& checkpoints) {
  double R = reach(f);
  std::vector<double> out;
  for (double T : checkpoints) {
    if (T >= R) fail(ErrorKind::Horizon, "checkpoint beyond the record horizon");
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (std::abs(f.time(i)) >= T && (f.domain() == Domain::FullLine || f.time(i) >= T))
        m = std::max(m, f.norm_at(i));
    out.push_back(m);
  }
  return out;
}

ClassReport is_c0(const SampledSignal& f, const DetectOptions& o) {
  double scale = ref_scale(f, o);
  ClassReport r = make(FunctionClass::C0, o, scale);
  double R = reach(f);
  if (!(R > 0)) fail(ErrorKind::Horizon, "record too short for a tail test");
  std::vector<double> cps{0.25 * R, 0.5 * R, 0.75 * R};
  std::vector<double> sups = tail_sup(f, cps);
  double th = tau(o.tol.tol_c0, scale, o.error_bound);
  r.evidence = ojson{{"checkpoints", cps}, {"tail_sup", sups}, {"threshold", th}};
  double first = sups.front(), last = sups.back();
  if (last <= th && (last < 0.5 * first || first <= th)) {
    r.member = Tri::Yes;
  } else if (last > 2 * th && last >= 0.5 * first) {
    double wt = 0, wv = -1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      double t = f.time(i);
      if (std::abs(t) < cps.back() || (f.domain() == Domain::HalfLine && t < cps.back())) continue;
      if (f.norm_at(i) > wv) {
        wv = f.norm_at(i);
        wt = t;
      }
    }
    set_no(r, wt, wv, "tail sup does not decay");
  } else {
    r.member = Tri::Undecided;
    r.reason = "tail sup trend inconclusive at the record horizon";
  }
  return r;
}

ClassReport is_zero(const SampledSignal& f, const DetectOptions& o) {
  double scale = ref_scale(f, o);
  ClassReport r = make(FunctionClass::Zero, o, scale);
  double th = tau(o.tol.tol_c0, scale, o.error_bound);
  double m = 0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f.norm_at(i) > m) {
      m = f.norm_at(i);
      arg = i;
    }
  r.evidence = ojson{{"sup", m}, {"threshold", th}};
  if (m <= th) r.member = Tri::Yes;
  else if (m > 2 * th) set_no(r, f.time(arg), m, "nonzero sample");
  else r.reason = "sup between threshold and twice the threshold";
  return r;
}

ClassReport is_bounded(const SampledSignal& f, const DetectOptions& o) {
  double scale = ref_scale(f, o);
  ClassReport r = make(FunctionClass::Bounded, o, scale);
  double R = 0;
  for (std::size_t i : {std::size_t{0}, f.size() - 1}) R = std::max(R, std::abs(f.time(i)));
  std::array<double, 4> q{0, 0, 0, 0};
  std::array<double, 4> qt{0, 0, 0, 0};
  for (std::size_t i = 0; i < f.size(); ++i) {
    double a = std::abs(f.time(i));
    std::size_t b = std::min<std::size_t>(3, static_cast<std::size_t>(4.0 * a / std::max(R, 1e-300)));
    if (f.norm_at(i) >= q[b]) {
      q[b] = f.norm_at(i);
      qt[b] = f.time(i);
    }
  }
  double half = std::max(q[0], q[1]);
  double full = std::max(half, std::max(q[2], q[3]));
  double th = tau(o.tol.tol_c0, scale, o.error_bound);
  r.evidence = ojson{{"quarter_sup", q}, {"first_half_sup", half}, {"sup", full}, {"threshold", th}};
  bool rising = q[0] < q[1] && q[1] < q[2] && q[2] < q[3];
  if (full <= 1.25 * half + th) r.member = Tri::Yes;
  else if (full > 1.5 * half + 2 * th && rising) set_no(r, qt[3], q[3], "sup keeps growing with |t|");
  else r.reason = "growth between quarters inconclusive";
  return r;
}

ErgodicResult ergodic_mean(const SampledSignal& f, std::vector<double> T_list, double window,
                           const DetectOptions& o) {
  const double H = f.t_end() - f.t0();
  if (T_list.empty()) T_list = {H / 16, H / 8, H / 4};
  if (window <= 0) window = H / 2;
  std::sort(T_list.begin(), T_list.end());
  const std::size_t n = f.size(), d = f.dim();
  std::vector<cplx> P = prefix(f);
  ErgodicResult res;
  res.window = window;
  res.horizons = T_list;
  res.mean.value.resize(d);
  for (std::size_t c = 0; c < d; ++c) res.mean.value[c] = P[(n - 1) * d + c] / H;
  const std::size_t iw = static_cast<std::size_t>(std::llround(window / f.dt()));
  double scale = ref_scale(f, o);
  res.report = make(FunctionClass::Ergodic, o, scale);
  double wt = 0, wv = 0;
  for (double T : T_list) {
    std::size_t nT = static_cast<std::size_t>(std::max<long long>(1, std::llround(T / f.dt())));
    if (iw + nT > n - 1) fail(ErrorKind::Horizon, "ergodic window plus horizon exceeds the record");
    double Tq = static_cast<double>(nT) * f.dt();
    double worst = 0;
    std::size_t arg = 0;
    for (std::size_t i = 0; i <= iw; ++i) {
      double s = 0;
      for (std::size_t c = 0; c < d; ++c) s += std::norm((P[(i + nT) * d + c] - P[i * d + c]) / Tq - res.mean.value[c]);
      if (s > worst) {
        worst = s;
        arg = i;
      }
    }
    res.deviation.push_back(std::sqrt(worst));
    wt = f.time(arg);
    wv = std::sqrt(worst);
  }
  double th = tau(o.tol.tol_erg, scale, o.error_bound);
  bool decreasing = true;
  for (std::size_t k = 1; k < res.deviation.size(); ++k)
    decreasing = decreasing && res.deviation[k] < res.deviation[k - 1];
  double first = res.deviation.front(), last = res.deviation.back();
  ClassReport& r = res.report;
  r.evidence = ojson{{"horizons", T_list}, {"deviation", res.deviation}, {"window", window},
                     {"mean", cvec(res.mean.value)}, {"mean_norm", res.mean.norm()}, {"threshold", th}};
  if ((decreasing || last <= 1e-12 * std::max(scale, 1.0)) && last <= th) r.member = Tri::Yes;
  else if (last > 2 * th && last >= 0.8 * first) set_no(r, wt, wv, "windowed means do not settle");
  else r.reason = "deviation not below threshold at the largest horizon";
  return res;
}

ClassReport is_ergodic(const SampledSignal& f, bool mean_zero, const DetectOptions& o) {
  ErgodicResult e = ergodic_mean(f, {}, 0.0, o);
  ClassReport r = e.report;
  if (!mean_zero) return r;
  r.cls = FunctionClass::ErgodicMeanZero;
  double th = tau(o.tol.tol_erg, ref_scale(f, o), o.error_bound);
  double m = e.mean.norm();
  if (r.member == Tri::Yes) {
    if (m > 2 * th) set_no(r, f.t_end(), m, "ergodic with nonzero mean");
    else if (m > th) {
      r.member = Tri::Undecided;
      r.reason = "mean norm between threshold and twice the threshold";
    }
  }
  return r;
}

BohrCoefficient bohr_coefficient(const SampledSignal& f, double omega) {
  const std::size_t n = f.size(), d = f.dim();
  const std::size_t i0 = n / 2;
  BohrCoefficient b;
  b.omega = omega;
  b.a.assign(d, cplx{});
  if (n - i0 < 2) fail(ErrorKind::Horizon, "record too short for a Bohr mean");
  cplx rot = std::polar(1.0, -omega * f.dt());
  cplx e = std::polar(1.0, -omega * f.time(i0));
  for (std::size_t i = i0; i < n; ++i) {
    double w = (i == i0 || i == n - 1) ? 0.5 : 1.0;
    for (std::size_t c = 0; c < d; ++c) b.a[c] += w * e * f.row(i)[c];
    e *= rot;
    if (((i - i0) & 1023) == 1023) e = std::polar(1.0, -omega * f.time(i + 1));
  }
  double L = f.time(n - 1) - f.time(i0);
  for (auto& x : b.a) x *= f.dt() / L;
  return b;
}

namespace {

double half_length(const SampledSignal& f) { return f.time(f.size() - 1) - f.time(f.size() / 2); }

// Maximize |a(w)| near w0 within radius r.
BohrCoefficient refine(const SampledSignal& f, double w0, double r) {
  double lobe = std::numbers::pi / half_length(f);
  double step = std::min(r, 0.5 * lobe);
  int m = static_cast<int>(std::ceil(r / step));
  BohrCoefficient best = bohr_coefficient(f, w0);
  for (int j = -m; j <= m; ++j) {
    auto b = bohr_coefficient(f, w0 + j * step);
    if (b.norm() > best.norm()) best = b;
  }
  double lo = best.omega - step, hi = best.omega + step;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = bohr_coefficient(f, x1).norm(), f2 = bohr_coefficient(f, x2).norm();
  for (int it = 0; it < 40; ++it) {
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = bohr_coefficient(f, x1).norm();
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = bohr_coefficient(f, x2).norm();
    }
  }
  auto c = bohr_coefficient(f, 0.5 * (lo + hi));
  return c.norm() > best.norm() ? c : best;
}

SampledSignal subtract_term(const SampledSignal& f, const BohrCoefficient& b) {
  std::vector<cplx> v = f.to_vector();
  std::size_t d = f.dim();
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx e = std::polar(1.0, b.omega * f.time(i));
    for (std::size_t c = 0; c < d; ++c) v[i * d + c] -= b.a[c] * e;
  }
  return f.with_values(std::move(v));
}

}  // namespace

ApDecomposition ap_decompose(const SampledSignal& f, const std::vector<double>& candidates,
                             const DetectOptions& o) {
  double scale = ref_scale(f, o);
  double th = tau(o.tol.tol_bohr, scale, o.error_bound);
  double radius = std::max(std::numbers::pi / half_length(f), 0.05);
  ApDecomposition out;
  SampledSignal rem = f;
  std::vector<double> pool = candidates;
  while (!pool.empty()) {
    std::size_t pick = 0;
    BohrCoefficient best;
    double bn = -1;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      auto b = refine(rem, pool[j], radius);
      if (b.norm() > bn) {
        bn = b.norm();
        best = b;
        pick = j;
      }
    }
    if (bn <= th) break;
    out.terms.push_back(best);
    rem = subtract_term(rem, best);
    pool.erase(pool.begin() + static_cast<long>(pick));
  }
  // backfitting removes leakage between terms picked early
  for (int pass = 0; pass < 3 && out.terms.size() > 1; ++pass)
    for (auto& term : out.terms) {
      BohrCoefficient neg = term;
      for (auto& x : neg.a) x = -x;
      rem = subtract_term(rem, neg);
      term = refine(rem, term.omega, 0.5 * radius);
      rem = subtract_term(rem, term);
    }
  std::vector<cplx> apv(f.size() * f.dim(), cplx{});
  for (auto& b : out.terms)
    for (std::size_t i = 0; i < f.size(); ++i) {
      cplx e = std::polar(1.0, b.omega * f.time(i));
      for (std::size_t c = 0; c < f.dim(); ++c) apv[i * f.dim() + c] += b.a[c] * e;
    }
  out.ap_part = f.with_values(std::move(apv));
  out.remainder = rem;
  DetectOptions oc = o;
  oc.scale = scale;
  ClassReport c0 = is_c0(rem, oc);
  out.report = c0;
  out.report.cls = FunctionClass::AAP;
  ojson terms = ojson::array();
  for (auto& b : out.terms) terms.push_back(ojson{{"omega", b.omega}, {"a", cvec(b.a)}, {"norm", b.norm()}});
  out.report.evidence = ojson{{"candidates", candidates}, {"bohr_threshold", th}, {"terms", terms},
                              {"remainder", c0.evidence}};
  return out;
}

std::vector<double> bohr_scan(const SampledSignal& f, Interval band, double threshold, std::size_t max_terms) {
  double step = 0.5 * std::numbers::pi / half_length(f);
  std::size_t m = static_cast<std::size_t>(std::ceil(band.width() / step)) + 1;
  std::vector<double> w(m), a(m, 0.0);
  const double ds = m > 1 ? band.width() / static_cast<double>(m - 1) : 0.0;
  for (std::size_t j = 0; j < m; ++j) w[j] = band.lo + ds * static_cast<double>(j);
  // Bohr means over the second half on the whole scan line at once.
  const std::size_t n = f.size(), i0 = n / 2;
  if (n - i0 < 2) fail(ErrorKind::Horizon, "record too short for a Bohr mean");
  const double L = f.time(n - 1) - f.time(i0);
  std::vector<cplx> x(n - i0);
  for (std::size_t c = 0; c < f.dim(); ++c) {
    for (std::size_t i = i0; i < n; ++i) x[i - i0] = ((i == i0 || i == n - 1) ? 0.5 : 1.0) * f.row(i)[c];
    auto X = detail::chirp_z(x, f.dt(), band.lo, ds, m);
    for (std::size_t j = 0; j < m; ++j) a[j] += std::norm(X[j]);
  }
  for (auto& v : a) v = std::sqrt(v) * f.dt() / L;
  std::vector<std::pair<double, double>> peaks;
  for (std::size_t j = 0; j < m; ++j) {
    bool left = j == 0 || a[j] >= a[j - 1];
    bool right = j + 1 == m || a[j] >= a[j + 1];
    if (left && right && a[j] > threshold) peaks.emplace_back(a[j], w[j]);
  }
  std::sort(peaks.begin(), peaks.end(), [](auto& x, auto& y) { return x.first > y.first; });
  std::vector<double> out;
  for (std::size_t k = 0; k < peaks.size() && k < max_terms; ++k) out.push_back(refine(f, peaks[k].second, ds).omega);
  return out;
}

namespace {

std::vector<double> ap_candidates(const SampledSignal& f, const DetectOptions& o) {
  if (!o.candidates.empty()) return o.candidates;
  Interval band = o.bohr_band.value_or(Interval{-5.0, 5.0});
  double th = tau(o.tol.tol_bohr, ref_scale(f, o), o.error_bound);
  return bohr_scan(f, band, th);
}

}  // namespace

ClassReport is_ap(const SampledSignal& f, const DetectOptions& o) {
  ApDecomposition dec = ap_decompose(f, ap_candidates(f, o), o);
  double scale = ref_scale(f, o);
  DetectOptions oz = o;
  oz.scale = scale;
  oz.tol.tol_c0 = o.tol.tol_bohr;
  ClassReport z = is_zero(dec.remainder, oz);
  ClassReport r = z;
  r.cls = FunctionClass::AP;
  r.evidence = dec.report.evidence;
  r.evidence["remainder_sup"] = z.evidence;
  if (r.member == Tri::No) r.reason = "remainder after trigonometric fit is not zero";
  return r;
}

std::vector<double> uc_modulus(const SampledSignal& f, const std::vector<double>& lags) {
  std::vector<double> out;
  for (double s : lags) {
    long m = f.steps(s);
    std::size_t am = static_cast<std::size_t>(std::labs(m));
    double worst = 0;
    for (std::size_t i = 0; i + am < f.size(); ++i) {
      double q = 0;
      for (std::size_t c = 0; c < f.dim(); ++c) q += std::norm(f.row(i + am)[c] - f.row(i)[c]);
      worst = std::max(worst, q);
    }
    out.push_back(std::sqrt(worst));
  }
  return out;
}

ClassReport is_uc(const SampledSignal& f, const DetectOptions& o) {
  double scale = ref_scale(f, o);
  ClassReport r = make(FunctionClass::UC, o, scale);
  const std::size_t n = f.size();
  if (n < 8) fail(ErrorKind::Horizon, "record too short for a continuity modulus");
  auto mod = [&](std::size_t lag, std::size_t lo, std::size_t hi, std::size_t* arg) {
    double worst = 0;
    for (std::size_t i = lo; i + lag < hi; ++i) {
      double q = 0;
      for (std::size_t c = 0; c < f.dim(); ++c) q += std::norm(f.row(i + lag)[c] - f.row(i)[c]);
      if (q > worst) {
        worst = q;
        if (arg) *arg = i;
      }
    }
    return std::sqrt(worst);
  };
  std::size_t arg = n / 2;
  double m1 = mod(1, 0, n / 2 + 1, nullptr);
  double m2 = mod(1, n / 2, n, &arg);
  double m2x = mod(2, n / 2, n, nullptr);
  double th = tau(o.tol.tol_uc, scale, o.error_bound);
  r.evidence = ojson{{"lag", f.dt()}, {"modulus_first_half", m1}, {"modulus_second_half", m2},
                     {"modulus_second_half_2lag", m2x}, {"threshold", th}};
  if (m2 <= th) r.member = Tri::Yes;
  else if (m2 > 1.5 * m1 + 2 * th) set_no(r, f.time(arg), m2, "continuity modulus grows along the record");
  else if (m2x < 1.2 * m2 && m2 > 2 * th) set_no(r, f.time(arg), m2, "continuity modulus saturated at the smallest lag");
  else if (m2x >= 1.5 * m2 && m2x <= 2.5 * m2) r.member = Tri::Yes;
  else r.reason = "modulus scaling inconclusive";
  return r;
}

ClassReport is_slowly_oscillating(const SampledSignal& f, const DetectOptions& o) {
  double scale = ref_scale(f, o);
  ClassReport r = make(FunctionClass::SlowlyOscillating, o, scale);
  const std::size_t n = f.size();
  std::vector<double> hs, es;
  for (long k : {8L, 4L, 2L}) {
    double h = static_cast<double>(k) * f.dt();
    SampledSignal u = mollify(f, h);
    double worst = 0;
    for (std::size_t i = n / 2; i < u.size(); ++i) {
      double q = 0;
      for (std::size_t c = 0; c < f.dim(); ++c) q += std::norm(f.row(i)[c] - u.row(i)[c]);
      worst = std::max(worst, q);
    }
    hs.push_back(h);
    es.push_back(std::sqrt(worst));
  }
  // Split F = u + xi with u = M_h* F, h* the smallest width above.
  SampledSignal u = mollify(f, hs.back());
  std::vector<cplx> xi(u.size() * f.dim());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t c = 0; c < f.dim(); ++c) xi[i * f.dim() + c] = f.row(i)[c] - u.row(i)[c];
  SampledSignal xis(f.domain(), f.t0(), f.dt(), f.dim(), std::move(xi), f.growth_exponent(), false);
  double R = reach(xis);
  std::vector<double> cps{0.25 * R, 0.5 * R, 0.75 * R};
  double th = tau(o.tol.tol_uc, scale, o.error_bound);
  r.evidence = ojson{{"h", hs}, {"late_sup_F_minus_MhF", es}, {"h_star", hs.back()},
                     {"xi_checkpoints", cps}, {"xi_tail_sup", tail_sup(xis, cps)}, {"threshold", th}};
  double e8 = es[0], e4 = es[1], e2 = es[2];
  double early = 0;
  for (std::size_t i = 0; i < n / 2 && i < u.size(); ++i) {
    double q = 0;
    for (std::size_t c = 0; c < f.dim(); ++c) q += std::norm(f.row(i)[c] - u.row(i)[c]);
    early = std::max(early, std::sqrt(q));
  }
  r.evidence["early_sup_F_minus_MhF"] = early;
  if (e2 > 2 * early + 2 * th) set_no(r, f.t_end(), e2, "F - M_h F grows along the record");
  else if (e2 <= th || (e2 <= 0.7 * e4 && e4 <= 0.7 * e8)) r.member = Tri::Yes;
  else if (e2 > 2 * th && e2 >= 0.9 * e8) set_no(r, f.t_end(), e2, "F - M_h F does not shrink with h in the tail");
  else r.reason = "F - M_h F trend inconclusive";
  return r;
}

ClassReport detect(const SampledSignal& f, FunctionClass cls, const DetectOptions& o) {
  switch (cls) {
    case FunctionClass::Zero: return is_zero(f, o);
    case FunctionClass::C0: return is_c0(f, o);
    case FunctionClass::Bounded: return is_bounded(f, o);
    case FunctionClass::UC: return is_uc(f, o);
    case FunctionClass::Ergodic: return is_ergodic(f, false, o);
    case FunctionClass::ErgodicMeanZero: return is_ergodic(f, true, o);
    case FunctionClass::AP: return is_ap(f, o);
    case FunctionClass::AAP: return ap_decompose(f, ap_candidates(f, o), o).report;
    case FunctionClass::SlowlyOscillating: return is_slowly_oscillating(f, o);
  }
  fail(ErrorKind::Usage, "unknown function class");
}

}  // namespace redspec
