#include "redspec/corpus.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "redspec/error.hpp"

namespace redspec {

namespace {

struct Defaults {
  double tmax;
  double dt;
};

using Fn = std::function<cplx(double)>;

std::size_t count_for(double tmax, double dt) { return static_cast<std::size_t>(std::llround(tmax / dt)) + 1; }

SampledSignal half(Fn fn, double tmax, double dt, std::optional<int> growth = 0) {
  return SampledSignal::generate(Domain::HalfLine, 0.0, dt, count_for(tmax, dt), 1,
                                 [&](double t, cplx* v) { v[0] = fn(t); }, growth, false);
}

SampledSignal full(Fn fn, double tmax, double dt, std::optional<int> growth = 0) {
  std::size_t m = static_cast<std::size_t>(std::llround(tmax / dt));
  return SampledSignal::generate(Domain::FullLine, -static_cast<double>(m) * dt, dt, 2 * m + 1, 1,
                                 [&](double t, cplx* v) { v[0] = fn(t); }, growth, false);
}

double sinc(double t) { return std::abs(t) < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t; }

Expectation ex(std::string p, std::string v, std::string prov) {
  return Expectation{std::move(p), std::move(v), std::move(prov)};
}

double param(const ojson& p, const char* key, double def) {
  if (!p.contains(key)) return def;
  if (!p[key].is_number()) fail(ErrorKind::Usage, std::string("corpus parameter ") + key + " must be a number");
  double v = p[key].get<double>();
  if (!(v > 0) && std::string(key) != "omega0") fail(ErrorKind::Usage, std::string(key) + " must be positive");
  return v;
}

}  // namespace

cplx chirp_tail(double x) {
  constexpr double kSwitch = 8.0;
  if (x >= kSwitch) {
    // asymptotic series from repeated integration by parts
    const cplx I(0.0, 1.0);
    cplx term = 0.5 * I / x, sum{};
    const double x2 = x * x;
    for (int k = 1; k < 40; ++k) {
      sum += term;
      cplx next = term * (-I * (2.0 * k - 1.0) / 2.0) / x2;
      if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18) break;
      term = next;
    }
    return std::polar(1.0, x2) * sum;
  }
  // Simpson on [x, kSwitch]
  const int n = 2 * static_cast<int>(std::ceil((kSwitch - x) / 2e-4));
  const double h = (kSwitch - x) / n;
  cplx acc = std::polar(1.0, x * x) + std::polar(1.0, kSwitch * kSwitch);
  for (int j = 1; j < n; ++j) {
    double s = x + j * h;
    acc += (j % 2 ? 4.0 : 2.0) * std::polar(1.0, s * s);
  }
  return chirp_tail(kSwitch) + acc * (h / 3.0);
}

SampledSignal mollified_chirp(double h, double tmax, double dt) {
  if (!(h > 0) || !(dt > 0) || !(tmax > dt)) fail(ErrorKind::Usage, "mollified chirp needs h, dt > 0 and tmax > dt");
  return SampledSignal::generate(Domain::HalfLine, 0.0, dt, count_for(tmax, dt), 1,
                                 [h](double t, cplx* v) { v[0] = (chirp_tail(t) - chirp_tail(t + h)) / h; }, 0,
                                 false);
}

SampledSignal restrict_half_line(const SampledSignal& f) {
  if (f.domain() == Domain::HalfLine) return f;
  auto z = f.index_of(0.0);
  if (!z) fail(ErrorKind::GridMismatch, "t = 0 is not a sample of the record");
  SampledSignal s = f.slice(*z, f.size() - *z);
  return SampledSignal(Domain::HalfLine, 0.0, s.dt(), s.dim(), s.to_vector(), s.growth_exponent(), false);
}

SampledSignal CorpusSignal::half_line() const { return restrict_half_line(signal); }

SampledSignal CorpusSignal::carleman_input() const {
  if (two_sided) return *two_sided;
  return signal;
}

KernelFactory kernel_factory(const std::string& name) {
  if (name == "annihilator")
    return [](double w, double kdt) {
      KernelSampling s;
      s.dt = kdt;
      return annihilator_kernel(w, s);
    };
  fail(ErrorKind::Usage, "unknown kernel registry name " + name);
}

ojson CorpusSignal::metadata() const {
  ojson j;
  j["name"] = name;
  j["params"] = params;
  j["domain"] = signal.domain() == Domain::HalfLine ? "half-line" : "full-line";
  j["t0"] = signal.t0();
  j["dt"] = signal.dt();
  j["samples"] = signal.size();
  j["growth"] = signal.growth_exponent() ? ojson(*signal.growth_exponent()) : ojson(nullptr);
  j["two_sided"] = two_sided.has_value();
  j["family"] = to_string(family.value_or(KernelFamily::S));
  j["kernels"] = kernel_names;
  ojson e = ojson::array();
  for (auto& x : expectations) e.push_back(ojson{{"property", x.property}, {"value", x.value}, {"provenance", x.provenance}});
  j["expectations"] = e;
  return j;
}

std::vector<std::string> corpus_names() {
  return {"zero",        "const",      "exp_iw0",   "exp_iw1",  "exp_iw_sqrt2", "decay_exp", "decay_inv",
          "inv_mod",     "chirp",      "chirp_m1",  "tchirp",   "expgrow",      "sinc",      "sinc2",
          "ap_sum",      "aap_mix",    "aap_mix2",  "so_composite"};
}

bool is_corpus_name(const std::string& name) {
  for (auto& n : corpus_names())
    if (n == name) return true;
  return false;
}

CorpusSignal make_corpus_signal(const std::string& name, const ojson& params) {
  static const std::map<std::string, Defaults> defaults = {
      {"zero", {1000, 0.05}},    {"const", {1000, 0.05}},      {"exp_iw0", {1000, 0.05}},
      {"exp_iw1", {1000, 0.05}}, {"exp_iw_sqrt2", {1000, 0.05}}, {"decay_exp", {1000, 0.05}},
      {"decay_inv", {2500, 0.05}}, {"inv_mod", {2500, 0.05}},  {"chirp", {200, 0.005}},
      {"chirp_m1", {200, 0.005}}, {"tchirp", {200, 0.005}},    {"expgrow", {12, 0.002}},
      {"sinc", {1000, 0.05}},    {"sinc2", {1000, 0.05}},      {"ap_sum", {1000, 0.05}},
      {"aap_mix", {1000, 0.05}}, {"aap_mix2", {2500, 0.05}},   {"so_composite", {1000, 0.05}}};
  auto it = defaults.find(name);
  if (it == defaults.end()) fail(ErrorKind::Usage, "unknown corpus signal '" + name + "'");
  if (!params.is_object()) fail(ErrorKind::Usage, "corpus parameters must be an object");
  for (auto& [k, v] : params.items())
    if (k != "tmax" && k != "dt" && k != "omega0") fail(ErrorKind::Usage, "unknown corpus parameter '" + k + "'");
  const double T = param(params, "tmax", it->second.tmax);
  const double dt = param(params, "dt", it->second.dt);
  if (dt > T / 4) fail(ErrorKind::Usage, "dt too large for the requested record");

  CorpusSignal c;
  c.name = name;
  c.params = ojson{{"tmax", T}, {"dt", dt}};
  const double sq2 = std::numbers::sqrt2;

  if (name == "zero") {
    c.signal = half([](double) { return cplx{}; }, T, dt);
    c.two_sided = full([](double) { return cplx{}; }, T, dt);
    c.expectations = {ex("beurling-singular", "empty", "trivial"), ex("class:zero", "yes", "trivial")};
  } else if (name == "const") {
    c.signal = half([](double) { return cplx(1.0); }, T, dt);
    c.two_sided = full([](double) { return cplx(1.0); }, T, dt);
    c.expectations = {ex("c0-singular", "{0}", "derived"), ex("class:ergodic", "yes", "derived")};
  } else if (name.rfind("exp_iw", 0) == 0) {
    double w0 = name == "exp_iw0" ? 0.0 : (name == "exp_iw1" ? 1.0 : sq2);
    w0 = params.contains("omega0") ? params["omega0"].get<double>() : w0;
    c.params["omega0"] = w0;
    Fn f = [w0](double t) { return std::polar(1.0, w0 * t); };
    c.signal = half(f, T, dt);
    c.two_sided = full(f, T, dt);
    c.expectations = {ex("laplace-singular", "near omega0", "derived"),
                      ex("carleman-singular", "near omega0", "derived"), ex("class:ap", "yes", "trivial")};
  } else if (name == "decay_exp") {
    c.signal = half([](double t) { return cplx(std::exp(-t)); }, T, dt);
    c.expectations = {ex("laplace-singular", "empty", "derived"), ex("weak-laplace-singular", "empty", "paper"),
                      ex("class:c0", "yes", "trivial")};
  } else if (name == "decay_inv") {
    c.signal = half([](double t) { return cplx(1.0 / (1.0 + t)); }, T, dt);
    c.expectations = {ex("c0-singular", "empty", "trivial"), ex("class:uc", "yes", "trivial"),
                      ex("class:c0", "yes", "trivial")};
  } else if (name == "inv_mod") {
    c.signal = half([](double t) { return std::polar(1.0 / (1.0 + t), t); }, T, dt);
    c.expectations = {ex("c0-singular", "empty", "paper")};
  } else if (name == "chirp" || name == "chirp_m1") {
    Fn f = [](double t) { return std::polar(1.0, t * t); };
    if (name == "chirp") {
      c.signal = half(f, T, dt);
      c.two_sided = full(f, T, dt);
      c.expectations = {ex("carleman-singular", "all", "paper"), ex("laplace-singular", "empty", "paper"),
                        ex("class:ergodic-mean-zero", "yes", "derived")};
    } else {
      c.params["h"] = 1.0;
      c.signal = mollified_chirp(1.0, T, dt);
      c.expectations = {ex("class:c0", "yes", "paper"), ex("laplace-singular", "empty", "paper")};
    }
  } else if (name == "tchirp") {
    c.signal = half([](double t) { return t * std::polar(1.0, t * t); }, T, dt, 1);
    c.expectations = {ex("class:bounded", "no", "paper")};
  } else if (name == "expgrow") {
    c.signal = full([](double t) { return cplx(std::exp(t)); }, T, dt, std::nullopt);
    c.family = KernelFamily::D;
    c.kernels.push_back(kernel_factory("annihilator"));
    c.kernel_names.push_back("annihilator");
    c.expectations = {ex("c0-singular-family-D", "empty", "paper")};
  } else if (name == "sinc") {
    c.signal = full([](double t) { return cplx(sinc(t)); }, T, dt);
    c.expectations = {ex("carleman-singular", "[-1,1]", "derived")};
  } else if (name == "sinc2") {
    c.signal = full([](double t) { double s = sinc(t); return cplx(s * s); }, T, dt);
    c.expectations = {ex("fourier-transform", "pi (1 - |w|/2)_+", "derived"), ex("class:c0", "yes", "trivial")};
  } else if (name == "ap_sum") {
    Fn f = [sq2](double t) { return std::polar(1.0, t) + std::polar(1.0, sq2 * t); };
    c.signal = half(f, T, dt);
    c.two_sided = full(f, T, dt);
    c.expectations = {ex("class:ap", "yes", "trivial"), ex("c0-singular", "{1, sqrt2}", "derived")};
  } else if (name == "aap_mix") {
    c.signal = half([](double t) { return std::polar(1.0, t) + std::exp(-t); }, T, dt);
    c.expectations = {ex("c0-singular", "{1}", "derived"), ex("class:aap", "yes", "derived")};
  } else if (name == "aap_mix2") {
    c.signal = half([sq2](double t) { return std::polar(1.0, sq2 * t) + 1.0 / (1.0 + t); }, T, dt);
    c.expectations = {ex("c0-singular", "{sqrt2}", "derived"), ex("class:aap", "yes", "derived")};
  } else if (name == "so_composite") {
    c.signal = half([](double t) { return std::polar(1.0, std::log1p(t)) + std::exp(-t); }, T, dt);
    c.expectations = {ex("class:slowly-oscillating", "yes", "derived")};
  }
  return c;
}

std::vector<CorpusSignal> builtin_corpus() {
  std::vector<CorpusSignal> v;
  for (auto& n : corpus_names()) v.push_back(make_corpus_signal(n));
  return v;
}

}  // namespace redspec
