#include "redspec/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ull;
  return h;
}

constexpr const char* kIds[] = {
    "inclusion-chain",   "ergodic-theorem",      "tauberian",           "regular-ft",
    "expectations",      "modulation-shift",     "translation-invariance", "convolution-shrinking",
    "mollifier-union",   "subadditivity",        "evolution",           "transform-identities",
    "wiener-division",   "approximate-identity", "kernel-consistency",  "annihilator",
    "pole-localization", "mollified-chirp",      "ergodic-mean",        "ap-coefficient",
};

CheckResult make(const std::string& id, const std::string& subject) {
  CheckResult r;
  r.id = id;
  r.subject = subject;
  return r;
}

CheckResult vacuous(CheckResult r, const std::string& why) {
  r.status = CheckStatus::Vacuous;
  r.reason = why;
  return r;
}

std::string describe(const Error& e) { return e.what(); }

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

SpectrumOptions spectrum_opts(const CorpusSignal& c, const SuiteOptions& o) {
  SpectrumOptions s = o.spectra;
  s.extra_kernels = c.kernels;
  return s;
}

KernelFamily family_of(const CorpusSignal& c) { return c.family.value_or(KernelFamily::S); }

KernelSampling sampling_at(double dt) {
  KernelSampling s;
  s.dt = dt;
  return s;
}

// Named spectra of a corpus signal: aap, c0, wl, laplace, carleman, beurling.
const SpectrumEstimate& spectrum(const CorpusSignal& c, const std::string& kind, const SuiteOptions& o,
                                 SpectrumCache& cache) {
  return cache.get(c.name + "/" + kind, [&]() {
    SpectrumOptions so = spectrum_opts(c, o);
    if (kind == "aap") return reduced_spectrum(c.half_line(), FunctionClass::AAP, family_of(c), o.grid, so);
    if (kind == "c0") return reduced_spectrum(c.half_line(), FunctionClass::C0, family_of(c), o.grid, so);
    if (kind == "wl") return weak_laplace_spectrum(c.half_line(), o.grid, so);
    if (kind == "laplace") return laplace_spectrum(c.half_line(), o.grid, so);
    if (kind == "carleman") return carleman_spectrum(c.carleman_input(), o.grid, so);
    if (kind == "beurling") return beurling_spectrum(c.signal, o.grid, so);
    fail(ErrorKind::Usage, "unknown spectrum kind " + kind);
  });
}

SpectrumEstimate reduced_c0(const SampledSignal& f, const CorpusSignal& c, const SuiteOptions& o) {
  return reduced_spectrum(f, FunctionClass::C0, family_of(c), o.grid, spectrum_opts(c, o));
}

ojson counts(const SpectrumEstimate& s) {
  return ojson{{"singular", s.count(Status::Singular)},
               {"undecided", s.count(Status::Undecided)},
               {"regular", s.count(Status::Regular)}};
}

// Runs of consecutive Singular grid points.
std::vector<std::pair<double, double>> singular_runs(const SpectrumEstimate& s) {
  std::vector<std::pair<double, double>> runs;
  bool open = false;
  for (auto& c : s.certificates) {
    if (c.status == Status::Singular) {
      if (!open) runs.push_back({c.omega, c.omega});
      runs.back().second = c.omega;
      open = true;
    } else {
      open = false;
    }
  }
  return runs;
}

double parse_frequency(std::string t) {
  t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); }),
          t.end());
  if (t == "sqrt2") return std::numbers::sqrt2;
  if (t == "-sqrt2") return -std::numbers::sqrt2;
  return std::stod(t);
}

std::vector<double> parse_set(const std::string& v) {
  std::vector<double> out;
  std::string body = v.substr(1, v.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_frequency(item));
  return out;
}

void finish(CheckResult& r, std::size_t violations, std::size_t evaluated, const std::string& first_violation) {
  if (violations > 0) {
    r.status = CheckStatus::Fail;
    r.reason = first_violation;
  } else if (evaluated == 0) {
    r.status = CheckStatus::Vacuous;
    if (r.reason.empty()) r.reason = "no decided point to test";
  } else {
    r.status = CheckStatus::Pass;
  }
}

}  // namespace

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Vacuous: return "vacuous";
  }
  return "?";
}

ojson CheckResult::to_json() const {
  ojson j;
  j["id"] = id;
  j["subject"] = subject;
  j["status"] = to_string(status);
  j["reason"] = reason;
  j["details"] = details;
  return j;
}

const SpectrumEstimate& SpectrumCache::get(const std::string& key, const std::function<SpectrumEstimate()>& make) {
  auto it = map_.find(key);
  if (it != map_.end()) return it->second;
  return map_.emplace(key, make()).first->second;
}

std::vector<std::string> check_ids() { return {std::begin(kIds), std::end(kIds)}; }

bool is_check_id(const std::string& id) {
  return std::find(std::begin(kIds), std::end(kIds), id) != std::end(kIds);
}

// ----- per-signal checks -----

CheckResult check_inclusion_chain(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache) {
  CheckResult r = make("inclusion-chain", c.name);
  const char* order[] = {"aap", "c0", "wl", "laplace", "carleman"};
  std::vector<const SpectrumEstimate*> sp;
  std::vector<std::string> have;
  ojson skipped = ojson::object();
  for (const char* k : order) {
    try {
      sp.push_back(&spectrum(c, k, o, cache));
      have.push_back(k);
    } catch (const Error& e) {
      skipped[k] = describe(e);
    }
  }
  r.details["engines"] = have;
  r.details["skipped"] = skipped;
  if (sp.size() < 2) return vacuous(r, "fewer than two spectra could be estimated");
  ojson viol = ojson::array();
  std::size_t nviol = 0, compared = 0;
  std::string first;
  for (std::size_t i = 0; i < sp.size(); ++i)
    for (std::size_t j = i + 1; j < sp.size(); ++j)
      for (std::size_t q = 0; q < o.grid.size(); ++q) {
        const auto& a = sp[i]->certificates[q];
        const auto& b = sp[j]->certificates[q];
        if (a.status == Status::Undecided || b.status == Status::Undecided) continue;
        ++compared;
        if (a.status == Status::Singular && b.status == Status::Regular) {
          if (nviol == 0)
            first = have[i] + " singular at " + fmt(a.omega) + " but " + have[j] + " regular via " + b.kernel_id;
          if (viol.size() < 10) viol.push_back(ojson{{"inner", have[i]}, {"outer", have[j]}, {"omega", a.omega}});
          ++nviol;
        }
      }
  ojson cnt = ojson::object();
  for (std::size_t i = 0; i < sp.size(); ++i) cnt[have[i]] = counts(*sp[i]);
  r.details["counts"] = cnt;
  r.details["violations"] = viol;
  r.details["violation_count"] = nviol;
  finish(r, nviol, compared, first);
  return r;
}

CheckResult check_ergodic_theorem(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache) {
  CheckResult r = make("ergodic-theorem", c.name);
  SampledSignal f = c.half_line();
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  Tri bounded = is_bounded(f, dopt).member;
  Tri so = bounded == Tri::Yes ? Tri::Undecided : is_slowly_oscillating(f, dopt).member;
  r.details["bounded"] = to_string(bounded);
  if (bounded != Tri::Yes) r.details["slowly_oscillating"] = to_string(so);
  if (bounded != Tri::Yes && so != Tri::Yes) return vacuous(r, "neither bounded nor slowly oscillating");
  const SpectrumEstimate* sp;
  try {
    sp = &spectrum(c, "c0", o, cache);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  dopt.scale = signal_scale(f);
  std::size_t tested = 0, skipped = 0, bad = 0;
  std::string first;
  ojson points = ojson::array();
  for (auto& cert : sp->certificates) {
    if (cert.status != Status::Regular) continue;
    ClassReport rep;
    try {
      rep = is_ergodic(modulate(f, -cert.omega), true, dopt);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    if (rep.member == Tri::Undecided) {
      ++skipped;
      continue;
    }
    ++tested;
    if (rep.member == Tri::No) {
      if (bad == 0) first = "regular at " + fmt(cert.omega) + " but " + rep.reason;
      ++bad;
      points.push_back(ojson{{"omega", cert.omega}, {"reason", rep.reason}});
    }
  }
  r.details["tested"] = tested;
  r.details["undecided"] = skipped;
  r.details["violations"] = points;
  finish(r, bad, tested, first);
  return r;
}

CheckResult check_tauberian(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache) {
  CheckResult r = make("tauberian", c.name);
  SampledSignal f = c.half_line();
  const SpectrumEstimate* sp;
  try {
    sp = &spectrum(c, "c0", o, cache);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  auto runs = singular_runs(*sp);
  std::size_t ns = sp->count(Status::Singular);
  r.details["singular_runs"] = runs.size();
  if (runs.size() > 8 || ns * 4 > o.grid.size()) return vacuous(r, "singular set is not countable on the grid");

  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  // frequency representatives: Bohr peak near each run
  // peel Bohr peaks off each run until the next one is small
  std::vector<double> reps;
  const double floor = 0.05 * signal_scale(f);
  for (auto& [lo, hi] : runs) {
    SampledSignal res = f;
    std::size_t found = 0;
    for (int k = 0; k < 4; ++k) {
      auto peak = bohr_scan(res, Interval{lo - o.grid.step, hi + o.grid.step}, 0.0, 1);
      if (peak.empty()) break;
      BohrCoefficient b = bohr_coefficient(res, peak.front());
      if (b.norm() < floor) break;
      reps.push_back(b.omega);
      ++found;
      std::vector<cplx> v = res.to_vector();
      for (std::size_t i = 0; i < res.size(); ++i) {
        cplx e = std::polar(1.0, b.omega * res.time(i));
        for (std::size_t c = 0; c < res.dim(); ++c) v[i * res.dim() + c] -= b.a[c] * e;
      }
      res = res.with_values(std::move(v));
    }
    if (found == 0) reps.push_back(0.5 * (lo + hi));
  }
  if (reps.size() > 1 && is_bounded(f, dopt).member == Tri::Yes) {
    // joint refinement
    auto dec = ap_decompose(f, reps, dopt);
    for (double& w : reps)
      for (auto& t : dec.terms)
        if (std::abs(t.omega - w) < 0.05) w = t.omega;
  }
  r.details["frequencies"] = reps;
  for (double w : reps) {
    Tri e = is_ergodic(modulate(f, -w), false, dopt).member;
    if (e != Tri::Yes)
      return vacuous(r, "ergodicity of the demodulated signal at " + fmt(w) + " is " + to_string(e));
  }

  TestKernel psi = family_of(c) == KernelFamily::D ? time_bump_kernel(0.0, 1.0, sampling_at(f.dt()))
                                                   : bump_kernel(sampling_at(f.dt()));
  std::size_t evaluated = 0, bad = 0;
  std::string first;
  ojson claims = ojson::array();
  auto assert_aap = [&](const std::string& what, const SampledSignal& g) {
    ClassReport rep = reps.empty() ? is_c0(g, dopt) : ap_decompose(g, reps, dopt).report;
    claims.push_back(ojson{{"claim", what}, {"member", to_string(rep.member)}, {"reason", rep.reason}});
    if (rep.member == Tri::Undecided) return;
    ++evaluated;
    if (rep.member == Tri::No) {
      if (bad == 0) first = what + " fails: " + rep.reason;
      ++bad;
    }
  };
  try {
    double err = 0;
    SampledSignal g = convolve_restricted(f, psi, 1, &err);
    DetectOptions gopt = dopt;
    gopt.error_bound = err;
    Tri uc = is_uc(g, gopt).member;
    r.details["convolution_uc"] = to_string(uc);
    if (uc == Tri::Yes) assert_aap(reps.empty() ? "F*psi in C0" : "F*psi in AAP", g);
  } catch (const Error& e) {
    r.details["convolution_error"] = describe(e);
  }
  Tri fuc = is_uc(f, dopt).member;
  r.details["signal_uc"] = to_string(fuc);
  if (fuc == Tri::Yes) assert_aap(reps.empty() ? "F in C0" : "F in AAP", f);
  r.details["claims"] = claims;
  if (evaluated == 0 && bad == 0)
    r.reason = claims.empty() ? "uniform continuity not established" : "conclusion undecided at this record length";
  finish(r, bad, evaluated, first);
  return r;
}

std::optional<CheckResult> check_regular_ft(const CorpusSignal& c, const SuiteOptions& o) {
  std::function<double(double)> Fhat;
  if (c.name == "sinc2") Fhat = [](double w) { return std::numbers::pi * std::max(0.0, 1.0 - std::abs(w) / 2.0); };
  else if (c.name == "zero") Fhat = [](double) { return 0.0; };
  else return std::nullopt;
  CheckResult r = make("regular-ft", c.name);
  const SampledSignal& f = c.signal;
  TestKernel psi = bump_kernel(sampling_at(f.dt()));
  ConvolvedSignal cv = convolve(ExtendedSignal(f, f.t0()), psi);
  SampledSignal g = cv.valid();
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  dopt.error_bound = cv.error_bound;
  dopt.scale = std::max(1.0, signal_scale(f));
  ClassReport c0 = is_c0(g, dopt);
  // (F*psi)(t) = (1/2pi) int Fhat psihat e^{i eta t}, integrand supported in [-2, 2]
  const int m = 8000;
  const double h = 4.0 / m;
  std::vector<double> prod(m + 1);
  for (int j = 0; j <= m; ++j) {
    double eta = -2.0 + j * h;
    prod[static_cast<std::size_t>(j)] = Fhat(eta) * psi.ft(eta).real();
  }
  double worst = 0, worst_t = 0;
  const std::size_t step = std::max<std::size_t>(1, g.size() / 200);
  for (std::size_t i = 0; i < g.size(); i += step) {
    double t = g.time(i);
    cplx acc{};
    // Simpson; the kink at 0 sits on a node
    for (int j = 0; j <= m; ++j) {
      double w = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
      acc += w * prod[static_cast<std::size_t>(j)] * std::polar(1.0, (-2.0 + j * h) * t);
    }
    cplx ref = acc * (h / 3.0) / (2.0 * std::numbers::pi);
    double e = std::abs(ref - g.at(i));
    if (e > worst) {
      worst = e;
      worst_t = t;
    }
  }
  r.details["c0"] = c0.to_json();
  r.details["inverse_transform_error"] = worst;
  r.details["worst_t"] = worst_t;
  r.details["tolerance"] = o.tol_conv;
  if (c0.member == Tri::No) {
    r.status = CheckStatus::Fail;
    r.reason = "F*psi is not in C0: " + c0.reason;
  } else if (worst > o.tol_conv) {
    r.status = CheckStatus::Fail;
    r.reason = "F*psi differs from the inverse transform of Fhat psihat by " + fmt(worst) + " at t=" + fmt(worst_t);
  } else if (c0.member == Tri::Undecided) {
    r.status = CheckStatus::Vacuous;
    r.reason = "C0 membership of F*psi undecided";
  } else {
    r.status = CheckStatus::Pass;
  }
  return r;
}

std::vector<CheckResult> check_expectations(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache) {
  std::vector<CheckResult> out;
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  for (const Expectation& e : c.expectations) {
    CheckResult r = make("expectations", c.name + ":" + e.property);
    r.details["expected"] = e.value;
    r.details["provenance"] = e.provenance;
    if (e.property.rfind("class:", 0) == 0) {
      auto cls = parse_class(e.property.substr(6));
      if (!cls) continue;
      ClassReport rep;
      try {
        rep = detect(c.half_line(), *cls, dopt);
      } catch (const Error& err) {
        out.push_back(vacuous(r, describe(err)));
        continue;
      }
      r.details["report"] = rep.to_json();
      Tri want = e.value == "yes" ? Tri::Yes : Tri::No;
      if (rep.member == Tri::Undecided) r = vacuous(r, "detector undecided: " + rep.reason);
      else if (rep.member == want) r.status = CheckStatus::Pass;
      else {
        r.status = CheckStatus::Fail;
        r.reason = std::string("detector says ") + to_string(rep.member) + ": " + rep.reason;
      }
      out.push_back(r);
      continue;
    }
    static const std::map<std::string, std::string> kinds = {
        {"c0-singular", "c0"},         {"c0-singular-family-D", "c0"},
        {"laplace-singular", "laplace"}, {"weak-laplace-singular", "wl"},
        {"carleman-singular", "carleman"}, {"beurling-singular", "beurling"}};
    auto k = kinds.find(e.property);
    if (k == kinds.end()) continue;
    const SpectrumEstimate* sp;
    try {
      sp = &spectrum(c, k->second, o, cache);
    } catch (const Error& err) {
      out.push_back(vacuous(r, describe(err)));
      continue;
    }
    const std::size_t n = o.grid.size();
    const std::size_t S = sp->count(Status::Singular), U = sp->count(Status::Undecided);
    r.details["counts"] = counts(*sp);
    std::string bad;
    if (e.value == "empty") {
      if (S > 0) bad = "singular at " + fmt(sp->singular_set().front());
      else if (U * 10 > n) bad = "too many undecided points";
    } else if (e.value == "all") {
      if (S * 100 < 95 * n) bad = "singular at only " + std::to_string(S) + " of " + std::to_string(n) + " points";
    } else if (e.value == "near omega0" || e.value.front() == '{') {
      std::vector<double> centers =
          e.value.front() == '{' ? parse_set(e.value) : std::vector<double>{c.params.value("omega0", 0.0)};
      for (double w : sp->singular_set()) {
        double dist = 1e300;
        for (double x : centers) dist = std::min(dist, std::abs(w - x));
        if (dist > 1.0 && bad.empty()) bad = "singular at " + fmt(w) + " far from the expected set";
      }
      for (double x : centers) {
        if (x < o.grid.min || x > o.grid.max) continue;
        if (sp->status_at(x) != Status::Singular && bad.empty()) bad = "not singular at " + fmt(x);
      }
    } else if (e.value.front() == '[') {
      auto iv = parse_set(e.value);
      for (auto& cert : sp->certificates) {
        bool inside = cert.omega >= iv[0] - 1e-9 && cert.omega <= iv[1] + 1e-9;
        bool deep_out = cert.omega < iv[0] - 0.3 || cert.omega > iv[1] + 0.3;
        if (inside && cert.status != Status::Singular && bad.empty()) bad = "not singular at " + fmt(cert.omega);
        if (deep_out && cert.status == Status::Singular && bad.empty()) bad = "singular at " + fmt(cert.omega);
      }
    } else {
      continue;
    }
    if (bad.empty()) r.status = CheckStatus::Pass;
    else {
      r.status = CheckStatus::Fail;
      r.reason = bad;
    }
    out.push_back(r);
  }
  return out;
}

// ----- operator properties -----

CheckResult check_modulation_shift(const CorpusSignal& c, double lambda, const SuiteOptions& o,
                                   SpectrumCache& cache) {
  CheckResult r = make("modulation-shift", c.name + " lambda=" + fmt(lambda));
  const long m = std::lround(lambda / o.grid.step);
  if (std::abs(static_cast<double>(m) * o.grid.step - lambda) > 1e-9)
    return vacuous(r, "shift is not a multiple of the grid step");
  try {
    const SpectrumEstimate& base = spectrum(c, "c0", o, cache);
    SpectrumEstimate mod = reduced_c0(modulate(c.half_line(), lambda), c, o);
    std::size_t compared = 0, bad = 0;
    std::string first;
    for (std::size_t q = 0; q < o.grid.size(); ++q) {
      long p = static_cast<long>(q) - m;
      if (p < 0 || p >= static_cast<long>(o.grid.size())) continue;
      ++compared;
      Status a = mod.certificates[q].status, b = base.certificates[static_cast<std::size_t>(p)].status;
      if (a != b) {
        if (bad == 0)
          first = std::string("status ") + to_string(a) + " at " + fmt(o.grid.at(q)) + " vs " + to_string(b) +
                  " at " + fmt(o.grid.at(static_cast<std::size_t>(p)));
        ++bad;
      }
    }
    r.details["compared"] = compared;
    r.details["mismatches"] = bad;
    finish(r, bad, compared, first);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  return r;
}

CheckResult check_translation_invariance(const CorpusSignal& c, double s, const SuiteOptions& o,
                                         SpectrumCache& cache) {
  CheckResult r = make("translation-invariance", c.name + " s=" + fmt(s));
  try {
    const SpectrumEstimate& base = spectrum(c, "c0", o, cache);
    SpectrumEstimate sh = reduced_c0(translate(c.half_line(), s), c, o);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t q = 0; q < o.grid.size(); ++q) {
      Status a = sh.certificates[q].status, b = base.certificates[q].status;
      if (a != b) {
        if (bad == 0)
          first = "status at " + fmt(o.grid.at(q)) + ": " + to_string(a) + " after shift, " + to_string(b) + " before";
        ++bad;
      }
    }
    r.details["mismatches"] = bad;
    finish(r, bad, o.grid.size(), first);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  return r;
}

CheckResult check_convolution_shrinking(const CorpusSignal& c, const TestKernel& g, const SuiteOptions& o,
                                        SpectrumCache& cache) {
  CheckResult r = make("convolution-shrinking", c.name + " * " + g.id());
  try {
    const SpectrumEstimate& base = spectrum(c, "c0", o, cache);
    SampledSignal f = c.half_line();
    TestKernel gk = g.at_dt(f.dt());
    SampledSignal fg = convolve_restricted(f, gk, 1);
    SpectrumEstimate conv = reduced_c0(fg, c, o);
    std::size_t bad = 0;
    std::string first;
    for (std::size_t q = 0; q < o.grid.size(); ++q) {
      if (conv.certificates[q].status != Status::Singular) continue;
      double w = o.grid.at(q);
      bool allowed = base.certificates[q].status != Status::Regular && std::abs(gk.ft(w)) > gk.tol_ft();
      if (!allowed) {
        if (bad == 0) first = "F*g singular at " + fmt(w) + " outside sp(F) intersected with supp ghat";
        ++bad;
      }
    }
    r.details["convolved"] = counts(conv);
    r.details["violations"] = bad;
    finish(r, bad, o.grid.size(), first);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  return r;
}

CheckResult check_mollifier_union(const CorpusSignal& c, const std::vector<double>& hs, const SuiteOptions& o,
                                  SpectrumCache& cache) {
  CheckResult r = make("mollifier-union", c.name);
  try {
    const SpectrumEstimate& base = spectrum(c, "c0", o, cache);
    std::vector<SpectrumEstimate> mh;
    for (double h : hs) mh.push_back(reduced_c0(mollify(c.half_line(), h), c, o));
    std::size_t bad = 0;
    std::string first;
    for (std::size_t q = 0; q < o.grid.size(); ++q) {
      double w = o.grid.at(q);
      bool any_singular = false, any_open = false;
      for (std::size_t k = 0; k < mh.size(); ++k) {
        Status s = mh[k].certificates[q].status;
        any_singular = any_singular || s == Status::Singular;
        any_open = any_open || s != Status::Regular;
        if (s == Status::Singular && base.certificates[q].status == Status::Regular) {
          if (bad == 0) first = "M_h F singular at " + fmt(w) + " with h=" + fmt(hs[k]) + " but F regular";
          ++bad;
        }
      }
      if (base.certificates[q].status == Status::Singular && !any_open) {
        if (bad == 0) first = "F singular at " + fmt(w) + " but every M_h F regular";
        ++bad;
      }
      (void)any_singular;
    }
    r.details["h"] = hs;
    r.details["violations"] = bad;
    finish(r, bad, o.grid.size(), first);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  return r;
}

CheckResult check_subadditivity(const CorpusSignal& a, const CorpusSignal& b, const SuiteOptions& o,
                                SpectrumCache& cache) {
  CheckResult r = make("subadditivity", a.name + " + " + b.name);
  try {
    SampledSignal fa = a.half_line(), fb = b.half_line();
    if (std::abs(fa.dt() - fb.dt()) > kLatticeTol * fa.dt()) return vacuous(r, "signals live on different grids");
    const std::size_t n = std::min(fa.size(), fb.size());
    fa = fa.slice(0, n);
    fb = fb.slice(0, n);
    SpectrumOptions so = o.spectra;
    SpectrumEstimate sa = reduced_spectrum(fa, FunctionClass::C0, KernelFamily::S, o.grid, so);
    SpectrumEstimate sb = reduced_spectrum(fb, FunctionClass::C0, KernelFamily::S, o.grid, so);
    SampledSignal sum = add(fa, fb);
    SpectrumEstimate ss = reduced_spectrum(sum, FunctionClass::C0, KernelFamily::S, o.grid, so);
    std::size_t bad = 0, tested = 0, unresolved = 0;
    std::string first;
    for (std::size_t q = 0; q < o.grid.size(); ++q) {
      const auto& ca = sa.certificates[q];
      const auto& cb = sb.certificates[q];
      if (ca.status != Status::Regular || cb.status != Status::Regular) continue;
      ++tested;
      Status st = ss.certificates[q].status;
      if (st == Status::Undecided) {
        // combine on the common plateau
        SpectrumOptions narrow = so;
        double d = std::min(ca.delta > 0 ? ca.delta : so.delta_seq.back(), cb.delta > 0 ? cb.delta : so.delta_seq.back());
        narrow.delta_seq = {d};
        st = test_regular(sum, o.grid.at(q), FunctionClass::C0, KernelFamily::S, narrow).status;
        if (st == Status::Undecided) ++unresolved;
      }
      if (st == Status::Singular) {
        if (bad == 0) first = "sum singular at " + fmt(o.grid.at(q)) + " where both terms are regular";
        ++bad;
      }
    }
    r.details["tested"] = tested;
    r.details["unresolved"] = unresolved;
    r.details["violations"] = bad;
    finish(r, bad, tested, first);
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  (void)cache;
  return r;
}

// ----- evolution -----

namespace {

SampledSignal forcing(double tmax, double dt, std::size_t d, const std::vector<cplx>& rates,
                      const std::vector<Eigen::VectorXcd>& coeffs) {
  const std::size_t n = static_cast<std::size_t>(std::llround(tmax / dt)) + 1;
  return SampledSignal::generate(
      Domain::HalfLine, 0.0, dt, n, d,
      [&](double t, cplx* v) {
        for (std::size_t c = 0; c < d; ++c) v[c] = 0.0;
        for (std::size_t j = 0; j < rates.size(); ++j) {
          cplx e = std::exp(rates[j] * t);
          for (std::size_t c = 0; c < d; ++c) v[c] += e * coeffs[j](static_cast<Eigen::Index>(c));
        }
      },
      0, false);
}

}  // namespace

std::vector<EvolutionInstance> closed_form_evolution_instances(double tmax, double dt) {
  std::vector<EvolutionInstance> v;
  auto one = [](cplx x) {
    Eigen::VectorXcd b(1);
    b(0) = x;
    return b;
  };
  {
    EvolutionInstance e{"damped-forced", {}};
    e.problem.A = Eigen::MatrixXcd::Constant(1, 1, -1.0);
    e.problem.phi = forcing(tmax, dt, 1, {cplx(0, 1)}, {one(1.0)});
    e.problem.u0 = one(0.0);
    v.push_back(e);
  }
  {
    EvolutionInstance e{"oscillator-detuned", {}};
    e.problem.A = Eigen::MatrixXcd::Constant(1, 1, cplx(0, 1));
    e.problem.phi = forcing(tmax, dt, 1, {cplx(0, 2.5)}, {one(1.0)});
    e.problem.u0 = one(1.0);
    v.push_back(e);
  }
  {
    EvolutionInstance e{"diag-decaying-forcing", {}};
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
    A(0, 0) = cplx(0, -2);
    A(1, 1) = -1.0;
    Eigen::VectorXcd b(2);
    b << 1.0, 1.0;
    e.problem.A = A;
    e.problem.phi = forcing(tmax, dt, 2, {cplx(-0.5, 1)}, {b});
    e.problem.u0 = b;
    v.push_back(e);
  }
  {
    EvolutionInstance e{"unstable", {}};
    e.problem.A = Eigen::MatrixXcd::Constant(1, 1, 0.05);
    e.problem.phi = forcing(tmax, dt, 1, {cplx(0, 1)}, {one(1.0)});
    e.problem.u0 = one(1.0);
    v.push_back(e);
  }
  return v;
}

std::vector<EvolutionInstance> random_evolution_instances(std::uint64_t seed, std::size_t count, double tmax,
                                                          double dt) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::normal_distribution<double> N(0.0, 1.0);
  auto unif = [&](double lo, double hi) { return lo + (hi - lo) * 0.5 * (U(rng) + 1.0); };
  auto far = [](double x, const std::vector<double>& v, double gap) {
    return std::all_of(v.begin(), v.end(), [&](double y) { return std::abs(x - y) >= gap; });
  };
  std::vector<EvolutionInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const int n_imag = 1 + static_cast<int>(rng() % static_cast<unsigned>(d));
    std::vector<double> betas;
    Eigen::VectorXcd D(d);
    for (int k = 0; k < d; ++k) {
      if (k < n_imag) {
        double b;
        do b = unif(-4.0, 4.0);
        while (!far(b, betas, 0.6));
        betas.push_back(b);
        D(k) = cplx(0.0, b);
      } else {
        D(k) = cplx(-unif(0.5, 2.0), unif(-4.0, 4.0));
      }
    }
    Eigen::MatrixXcd V(d, d);
    for (;;) {
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) V(a, b) = cplx(N(rng), N(rng));
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(V);
      auto s = svd.singularValues();
      if (s(d - 1) > 0 && s(0) / s(d - 1) < 20.0) break;
    }
    EvolutionInstance e;
    e.name = "random-" + std::to_string(i);
    e.problem.A = V * D.asDiagonal() * V.inverse();
    e.problem.u0 = Eigen::VectorXcd(d);
    for (int k = 0; k < d; ++k) e.problem.u0(k) = cplx(N(rng), N(rng));
    const bool decays = i % 2 == 1;
    std::vector<cplx> rates;
    std::vector<Eigen::VectorXcd> coeffs;
    std::vector<double> used = betas;
    for (int j = 0; j < 2; ++j) {
      double nu;
      do nu = unif(-4.0, 4.0);
      while (!far(nu, used, 0.6));
      used.push_back(nu);
      rates.push_back(cplx(decays ? -unif(0.5, 1.0) : 0.0, nu));
      Eigen::VectorXcd b(d);
      for (int k = 0; k < d; ++k) b(k) = cplx(N(rng), N(rng)) / std::sqrt(static_cast<double>(d));
      coeffs.push_back(b);
    }
    e.problem.phi = forcing(tmax, dt, static_cast<std::size_t>(d), rates, coeffs);
    out.push_back(std::move(e));
  }
  return out;
}

CheckResult check_evolution(const EvolutionInstance& inst, const SuiteOptions& o) {
  CheckResult r = make("evolution", inst.name);
  const auto& p = inst.problem;
  EvolutionSolution sol = solve_evolution(p);
  const double bound = o.tol_ode * (1.0 + sol.sup_norm);
  r.details["dim"] = p.A.rows();
  r.details["residual"] = sol.residual;
  r.details["residual_bound"] = bound;
  r.details["sup_norm"] = sol.sup_norm;
  std::vector<double> sigma;
  ojson eig = ojson::array();
  for (cplx mu : eigenvalues(p.A)) {
    eig.push_back(ojson::array({mu.real(), mu.imag()}));
    if (std::abs(mu.real()) <= 1e-6 * (1.0 + std::abs(mu))) sigma.push_back(mu.imag());
  }
  r.details["eigenvalues"] = eig;
  r.details["imaginary_spectrum"] = sigma;
  if (sol.residual > bound) {
    r.status = CheckStatus::Fail;
    r.reason = "solver residual " + fmt(sol.residual) + " exceeds " + fmt(bound);
    return r;
  }
  const std::size_t stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(o.evolution_out_dt / sol.u.dt())));
  SampledSignal u = sol.u.decimate(stride);
  SampledSignal phi = p.phi.decimate(stride);
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  Tri bounded = is_bounded(u, dopt).member;
  r.details["bounded"] = to_string(bounded);
  if (bounded != Tri::Yes) return vacuous(r, "solution is not bounded");
  auto near = [&](double w, const std::vector<double>& set) {
    return std::any_of(set.begin(), set.end(), [&](double s) { return std::abs(w - s) <= o.pole_radius; });
  };
  std::size_t bad = 0;
  std::string first;
  try {
    SpectrumEstimate lu = laplace_spectrum(u, o.grid, o.spectra);
    SpectrumEstimate lp = laplace_spectrum(phi, o.grid, o.spectra);
    std::vector<double> allowed = sigma;
    for (double w : lp.singular_set()) allowed.push_back(w);
    for (auto& c : lp.certificates)
      if (c.status == Status::Undecided) allowed.push_back(c.omega);
    for (double w : lu.singular_set())
      if (!near(w, allowed)) {
        if (bad == 0) first = "Laplace spectrum of u singular at " + fmt(w) + " away from i sigma(A) and sp(phi)";
        ++bad;
      }
    r.details["laplace_u"] = counts(lu);
    SpectrumEstimate cp = reduced_spectrum(phi, FunctionClass::C0, KernelFamily::S, o.grid, o.spectra);
    r.details["forcing_c0_singular"] = cp.count(Status::Singular);
    if (cp.count(Status::Singular) == 0) {
      SpectrumEstimate cu = reduced_spectrum(u, FunctionClass::C0, KernelFamily::S, o.grid, o.spectra);
      r.details["c0_u"] = counts(cu);
      for (double w : cu.singular_set())
        if (!near(w, sigma)) {
          if (bad == 0) first = "reduced C0 spectrum of u singular at " + fmt(w) + " away from i sigma(A)";
          ++bad;
        }
    }
  } catch (const Error& e) {
    return vacuous(r, describe(e));
  }
  finish(r, bad, 1, first);
  return r;
}

// ----- global checks -----

CheckResult check_transform_identities(const CorpusSignal& c, const SuiteOptions& o, std::size_t count) {
  CheckResult r = make("transform-identities", c.name);
  SampledSignal f = c.half_line();
  std::mt19937_64 rng(o.seed ^ fnv1a(c.name));
  std::uniform_real_distribution<double> re(0.05, 0.5), im(-5.0, 5.0);
  const double lattice[] = {0.5, 1.0, 2.0};
  std::vector<double> mags, shift_res, moll_res;
  for (std::size_t i = 0; i < count; ++i) {
    cplx lam(re(rng), im(rng));
    double s = lattice[rng() % 3], h = lattice[rng() % 3];
    auto v = laplace_transform(f, lam).value;
    double m = 0;
    for (auto x : v) m += std::norm(x);
    mags.push_back(std::sqrt(m));
    shift_res.push_back(shift_identity_residual(f, s, lam));
    moll_res.push_back(mollifier_identity_residual(f, h, lam));
  }
  std::vector<double> sorted = mags;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(sorted.size() / 2), sorted.end());
  const double scale = sorted[sorted.size() / 2];
  const double tol = o.tol_transform * scale;
  double ws = *std::max_element(shift_res.begin(), shift_res.end());
  double wm = *std::max_element(moll_res.begin(), moll_res.end());
  r.details["median_scale"] = scale;
  r.details["tolerance"] = tol;
  r.details["max_shift_residual"] = ws;
  r.details["max_mollifier_residual"] = wm;
  r.details["points"] = count;
  std::size_t bad = (ws > tol) + (wm > tol);
  finish(r, bad, count, ws > tol ? "shift identity residual " + fmt(ws) : "mollifier identity residual " + fmt(wm));
  return r;
}

CheckResult check_wiener_division(const std::string& subject, const TestKernel& f, Interval K,
                                  const SuiteOptions& o) {
  CheckResult r = make("wiener-division", subject);
  try {
    WienerOptions w;
    w.eps_div = o.eps_div;
    TestKernel g = wiener_divide(f, K, w, f.sampling());
    double res = wiener_residual(g, f, K);
    r.details["K"] = ojson::array({K.lo, K.hi});
    r.details["residual"] = res;
    r.details["tolerance"] = o.tol_wiener;
    finish(r, res > o.tol_wiener, 1, "sup |ghat fhat - 1| = " + fmt(res));
  } catch (const Error& e) {
    r.status = CheckStatus::Fail;
    r.reason = describe(e);
  }
  return r;
}

CheckResult check_approximate_identity(const SuiteOptions& o) {
  CheckResult r = make("approximate-identity", "exp(it)");
  (void)o;
  CorpusSignal c = make_corpus_signal("exp_iw1", ojson{{"tmax", 400.0}, {"dt", 0.05}});
  const SampledSignal& u = *c.two_sided;
  std::vector<double> errs;
  for (int n : {1, 2, 4, 8}) {
    TestKernel k = approximate_identity(n, sampling_at(u.dt()));
    SampledSignal v = convolve(ExtendedSignal(u, u.t0()), k).valid();
    auto ui = u.index_of(v.t0());
    double e = 0;
    for (std::size_t i = 0; i < v.size(); ++i) e = std::max(e, std::abs(v.at(i) - u.at(*ui + i)));
    errs.push_back(e);
  }
  CorpusSignal fine = make_corpus_signal("exp_iw1", ojson{{"tmax", 50.0}, {"dt", 0.01}});
  SampledSignal mu = mollify(fine.signal, 0.01);
  double em = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) em = std::max(em, std::abs(mu.at(i) - fine.signal.at(i)));
  bool mono = true;
  for (std::size_t k = 1; k < errs.size(); ++k) mono = mono && errs[k] < errs[k - 1];
  r.details["n"] = ojson::array({1, 2, 4, 8});
  r.details["conv_error"] = errs;
  r.details["mollifier_error_h0.01"] = em;
  std::string why;
  if (!mono) why = "errors do not decrease with n";
  else if (errs.back() > 0.05) why = "error at n=8 is " + fmt(errs.back());
  else if (em > 0.02) why = "mollifier error " + fmt(em);
  finish(r, why.empty() ? 0 : 1, 1, why);
  return r;
}

CheckResult check_kernel_consistency(const TestKernel& k, const SuiteOptions& o) {
  CheckResult r = make("kernel-consistency", k.id());
  (void)o;
  double d = k.fourier_consistency();
  double tol = k.tol_ft() + k.cut_mass();
  r.details["deviation"] = d;
  r.details["tolerance"] = tol;
  r.details["cut_mass"] = k.cut_mass();
  finish(r, d > tol, 1, "sampled transform deviates by " + fmt(d));
  return r;
}

double bump_exp_moment() {
  // Simpson on [-1, 1]; rho is smooth and flat at the ends
  const int n = 20000;
  const double h = 2.0 / n;
  double acc = 0;
  for (int j = 0; j <= n; ++j) {
    double s = -1.0 + j * h;
    double w = (j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
    acc += w * std::exp(-s) * bump::rho(s);
  }
  return acc * h / 3.0;
}

CheckResult check_annihilator(const SuiteOptions& o) {
  CheckResult r = make("annihilator", "exp(t)");
  CorpusSignal c = make_corpus_signal("expgrow");
  const SampledSignal& f = c.signal;
  ExtendedSignal ext(f, f.t0());
  std::size_t bad = 0;
  std::string first;
  ojson per = ojson::array();
  SpectrumOptions so = spectrum_opts(c, o);
  for (double w : {0.0, 1.0, 2.0}) {
    TestKernel k = annihilator_kernel(w, sampling_at(f.dt()));
    SampledSignal v = convolve(ext, k).valid();
    double sup = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (std::abs(v.time(i)) <= 5.0) sup = std::max(sup, std::abs(v.at(i)));
    RegularityCertificate cert = test_regular(f, w, FunctionClass::C0, KernelFamily::D, so);
    per.push_back(ojson{{"omega", w}, {"sup_conv", sup}, {"status", to_string(cert.status)}, {"kernel", cert.kernel_id}});
    if (sup > 1e-6 && bad++ == 0) first = "|e^t * f| reaches " + fmt(sup) + " at omega=" + fmt(w);
    if (cert.status != Status::Regular && bad++ == 0) first = "not regular at omega=" + fmt(w);
  }
  TestKernel psi = time_bump_kernel(0.0, 1.0, sampling_at(f.dt()));
  SampledSignal v = convolve(ext, psi).valid();
  const double expect = bump_exp_moment();
  double dev = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double t = v.time(i);
    if (std::abs(t) <= 5.0) dev = std::max(dev, std::abs(v.at(i) / std::exp(t) - expect));
  }
  r.details["frequencies"] = per;
  r.details["growth_constant"] = expect;
  r.details["growth_deviation"] = dev;
  if (dev > 1e-4 && bad++ == 0) first = "e^t * psi / e^t deviates from the moment by " + fmt(dev);
  finish(r, bad, 1, first);
  return r;
}

CheckResult check_pole_localization(const SuiteOptions& o, SpectrumCache& cache) {
  CorpusSignal c = make_corpus_signal("exp_iw1");
  const double w0 = 1.0;
  CheckResult r = make("pole-localization", c.name);
  std::size_t bad = 0;
  std::string first;
  ojson per = ojson::object();
  for (const char* k : {"c0", "wl", "laplace", "carleman"}) {
    const SpectrumEstimate& s = spectrum(c, k, o, cache);
    per[k] = counts(s);
    for (auto& cert : s.certificates) {
      double dist = std::abs(cert.omega - w0);
      bool ok = dist <= 0.25 + 1e-9 ? cert.status == Status::Singular
                                    : (dist > 1.0 + 1e-9 ? cert.status == Status::Regular : true);
      if (!ok && bad++ == 0)
        first = std::string(k) + " is " + to_string(cert.status) + " at " + fmt(cert.omega);
    }
  }
  r.details["spectra"] = per;
  finish(r, bad, 1, first);
  return r;
}

CheckResult check_mollified_chirp(double h, const SuiteOptions& o) {
  CheckResult r = make("mollified-chirp", "M_h chirp h=" + fmt(h));
  SampledSignal f = mollified_chirp(h, 3000.0, 0.05);
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  dopt.scale = 1.0;
  ClassReport rep = is_c0(f, dopt);
  r.details["report"] = rep.to_json();
  if (rep.member == Tri::Yes) r.status = CheckStatus::Pass;
  else {
    r.status = CheckStatus::Fail;
    r.reason = std::string("C0 detector says ") + to_string(rep.member) + ": " + rep.reason;
  }
  return r;
}

CheckResult check_ergodic_mean(const SuiteOptions& o) {
  CheckResult r = make("ergodic-mean", "chirp");
  CorpusSignal c = make_corpus_signal("chirp");
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  ErgodicResult e = ergodic_mean(c.signal, {25.0, 50.0, 100.0}, 0.0, dopt);
  bool dec = e.deviation[0] > e.deviation[1] && e.deviation[1] > e.deviation[2];
  r.details["mean_norm"] = e.mean.norm();
  r.details["deviation"] = e.deviation;
  r.details["report"] = e.report.to_json();
  std::string why;
  if (e.mean.norm() > o.spectra.tol.tol_erg) why = "mean norm " + fmt(e.mean.norm());
  else if (!dec) why = "deviation does not decrease over the horizons";
  else if (e.report.member != Tri::Yes) why = "not ergodic: " + e.report.reason;
  finish(r, why.empty() ? 0 : 1, 1, why);
  return r;
}

CheckResult check_ap_coefficient(const SuiteOptions& o) {
  CheckResult r = make("ap-coefficient", "aap_mix * psi");
  CorpusSignal c = make_corpus_signal("aap_mix");
  SampledSignal f = c.half_line();
  TestKernel psi = bump_kernel(sampling_at(f.dt()));
  double err = 0;
  SampledSignal g = convolve_restricted(f, psi, 1, &err);
  DetectOptions dopt;
  dopt.tol = o.spectra.tol;
  dopt.error_bound = err;
  ApDecomposition dec = ap_decompose(g, {1.0}, dopt);
  cplx a = dec.terms.at(0).a.at(0);
  double expect = psi.ft(1.0).real();
  r.details["coefficient"] = ojson::array({a.real(), a.imag()});
  r.details["psi_hat_1"] = expect;
  r.details["remainder"] = dec.report.to_json();
  std::string why;
  if (dec.report.member != Tri::Yes) why = std::string("remainder C0 verdict ") + to_string(dec.report.member);
  else if (std::abs(a - expect) > 1e-2) why = "coefficient off by " + fmt(std::abs(a - expect));
  finish(r, why.empty() ? 0 : 1, 1, why);
  return r;
}

// ----- suite -----

std::vector<CheckResult> run_suite(const std::vector<CorpusSignal>& corpus, const SuiteOptions& o,
                                   const std::optional<std::string>& only) {
  if (only && !is_check_id(*only)) fail(ErrorKind::Usage, "unknown check id " + *only);
  auto want = [&](const char* id) { return !only || *only == id; };
  std::vector<CheckResult> out;
  SpectrumCache cache;
  auto guarded = [&](const char* id, const std::string& subject, const std::function<void()>& fn) {
    if (!want(id)) return;
    // an engine error escaping a check is a failure of that check
    try {
      fn();
    } catch (const Error& e) {
      CheckResult r = make(id, subject);
      r.status = CheckStatus::Fail;
      r.reason = "engine " + describe(e);
      out.push_back(r);
    } catch (const std::exception& e) {
      CheckResult r = make(id, subject);
      r.status = CheckStatus::Fail;
      r.reason = std::string("engine error: ") + e.what();
      out.push_back(r);
    }
  };

  for (const CorpusSignal& c : corpus) {
    guarded("inclusion-chain", c.name, [&] { out.push_back(check_inclusion_chain(c, o, cache)); });
    guarded("ergodic-theorem", c.name, [&] { out.push_back(check_ergodic_theorem(c, o, cache)); });
    guarded("tauberian", c.name, [&] { out.push_back(check_tauberian(c, o, cache)); });
    guarded("regular-ft", c.name, [&] {
      if (auto x = check_regular_ft(c, o)) out.push_back(*x);
    });
    guarded("expectations", c.name, [&] {
      for (auto& x : check_expectations(c, o, cache)) out.push_back(x);
    });
  }

  // property subjects: preferred built-ins present in the corpus, else the first three signals
  std::vector<const CorpusSignal*> subj;
  for (const char* n : {"exp_iw1", "aap_mix", "ap_sum"})
    for (auto& c : corpus)
      if (c.name == n) subj.push_back(&c);
  for (std::size_t i = 0; subj.empty() && i < std::min<std::size_t>(3, corpus.size()); ++i) subj.push_back(&corpus[i]);
  for (const CorpusSignal* c : subj) {
    for (double lam : {-1.0, 0.5, 2.0})
      guarded("modulation-shift", c->name, [&] { out.push_back(check_modulation_shift(*c, lam, o, cache)); });
    for (double s : {1.0, 5.0, 20.0})
      guarded("translation-invariance", c->name, [&] { out.push_back(check_translation_invariance(*c, s, o, cache)); });
    guarded("convolution-shrinking", c->name,
            [&] { out.push_back(check_convolution_shrinking(*c, bump_kernel(sampling_at(c->signal.dt())), o, cache)); });
  }
  if (!subj.empty()) {
    guarded("mollifier-union", subj.front()->name,
            [&] { out.push_back(check_mollifier_union(*subj.front(), {0.5, 1.0, 2.0}, o, cache)); });
    if (subj.size() > 1) {
      const CorpusSignal* b = subj.size() > 1 ? subj[1] : subj[0];
      guarded("subadditivity", subj.front()->name, [&] { out.push_back(check_subadditivity(*subj.front(), *b, o, cache)); });
    }
  }

  if (want("evolution")) {
    auto inst = closed_form_evolution_instances(o.evolution_tmax, o.evolution_dt);
    auto rnd = random_evolution_instances(o.seed, o.evolution_instances, o.evolution_tmax, o.evolution_dt);
    inst.insert(inst.end(), rnd.begin(), rnd.end());
    for (auto& e : inst) guarded("evolution", e.name, [&] { out.push_back(check_evolution(e, o)); });
  }
  if (want("transform-identities"))
    for (const char* n : {"decay_exp", "exp_iw1", "chirp"})
      guarded("transform-identities", n, [&] { out.push_back(check_transform_identities(make_corpus_signal(n), o)); });
  if (want("wiener-division")) {
    KernelSampling s = sampling_at(0.05);
    guarded("wiener-division", "bump", [&] { out.push_back(check_wiener_division("bump", bump_kernel(s), {-1.0, 1.0}, o)); });
    guarded("wiener-division", "bandpass", [&] {
      out.push_back(check_wiener_division("bandpass(0,1)", bandpass_kernel(0.0, 1.0, s), {-0.5, 0.5}, o));
      out.push_back(check_wiener_division("bandpass(2,0.5)", bandpass_kernel(2.0, 0.5, s), {1.6, 2.4}, o));
    });
  }
  guarded("approximate-identity", "exp(it)", [&] { out.push_back(check_approximate_identity(o)); });
  if (want("kernel-consistency")) {
    KernelSampling s = sampling_at(0.01);
    std::vector<std::function<TestKernel()>> ks = {
        [&] { return bump_kernel(s); },
        [&] { return approximate_identity(4, s); },
        [&] { return bandpass_kernel(0.0, 1.0, s); },
        [&] { return bandpass_kernel(1.5, 0.25, s); },
        [&] { return time_bump_kernel(0.0, 1.0, s); },
        [&] { return annihilator_kernel(1.0, s); },
    };
    for (auto& k : ks) guarded("kernel-consistency", "kernel", [&] { out.push_back(check_kernel_consistency(k(), o)); });
  }
  guarded("annihilator", "exp(t)", [&] { out.push_back(check_annihilator(o)); });
  guarded("pole-localization", "exp_iw1", [&] { out.push_back(check_pole_localization(o, cache)); });
  for (double h : {0.5, 1.0, 2.0})
    guarded("mollified-chirp", "chirp", [&] { out.push_back(check_mollified_chirp(h, o)); });
  guarded("ergodic-mean", "chirp", [&] { out.push_back(check_ergodic_mean(o)); });
  guarded("ap-coefficient", "aap_mix", [&] { out.push_back(check_ap_coefficient(o)); });
  return out;
}

bool any_failed(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(), [](auto& r) { return r.status == CheckStatus::Fail; });
}

ojson to_json(const std::vector<CheckResult>& results) {
  ojson a = ojson::array();
  for (auto& r : results) a.push_back(r.to_json());
  return a;
}

}  // namespace redspec
