#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "redspec/theorems.hpp"

using namespace redspec;

namespace {

struct Verdict {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!note.empty()) note += "; ";
    note += what + (ok ? "" : " [violated]");
    pass = pass && ok;
  }
};

std::string num(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.4g", x);
  return b;
}

bool passed(const CheckResult& r) { return r.status == CheckStatus::Pass; }

std::string why(const CheckResult& r) {
  return r.id + "(" + r.subject + ")=" + to_string(r.status) + (r.reason.empty() ? "" : " " + r.reason);
}

SpectrumOptions opts_for(const CorpusSignal& c) {
  SpectrumOptions s;
  s.extra_kernels = c.kernels;
  return s;
}

Verdict ac1() {
  Verdict v;
  const FrequencyGrid grid;
  CorpusSignal chirp = make_corpus_signal("chirp");
  auto car = carleman_spectrum(chirp.carleman_input(), grid, opts_for(chirp));
  double frac = static_cast<double>(car.count(Status::Singular)) / static_cast<double>(grid.size());
  v.require(frac >= 0.95, "(a) carleman singular fraction " + num(frac) + " >= 0.95");
  auto lap = laplace_spectrum(chirp.half_line(), grid, opts_for(chirp));
  double und = static_cast<double>(lap.count(Status::Undecided)) / static_cast<double>(grid.size());
  v.require(lap.count(Status::Singular) == 0, "(b) laplace singular " + std::to_string(lap.count(Status::Singular)) + " == 0");
  v.require(und <= 0.10, "(b) laplace undecided fraction " + num(und) + " <= 0.1");
  SuiteOptions o;
  for (double h : {0.5, 1.0, 2.0}) {
    // the analytic mollified chirp agrees with Fresnel quadrature
    auto m = mollified_chirp(h, 60.0, 0.5);
    double dev = 0;
    for (std::size_t i = 0; i < m.size(); i += 7)
      dev = std::max(dev, std::abs(m.at(i) - oracle::fresnel(m.time(i), m.time(i) + h) / h));
    auto r = check_mollified_chirp(h, o);
    v.require(passed(r) && dev <= 1e-9, "(c) is_c0(M_h chirp) h=" + num(h) + " " + to_string(r.status) +
                                            ", oracle dev " + num(dev));
  }
  return v;
}

Verdict ac2() {
  Verdict v;
  auto r = check_annihilator(SuiteOptions{});
  const double ref = oracle::bump_exp_moment();
  double c = r.details.at("growth_constant").get<double>();
  for (auto& f : r.details.at("frequencies")) {
    double sup = f.at("sup_conv").get<double>();
    v.require(sup <= 1e-6 && f.at("status") == "regular",
              "omega=" + num(f.at("omega").get<double>()) + " |(e^t)*f| " + num(sup) + ", " +
                  f.at("status").get<std::string>());
  }
  double dev = r.details.at("growth_deviation").get<double>();
  v.require(std::abs(c - ref) <= 1e-10, "moment vs quadrature " + num(std::abs(c - ref)));
  v.require(dev <= 1e-4, "growth constant deviation " + num(dev) + " <= 1e-4");
  v.require(passed(r), why(r));
  return v;
}

Verdict ac3() {
  Verdict v;
  CorpusSignal c = make_corpus_signal("inv_mod");
  auto s = reduced_spectrum(c.half_line(), FunctionClass::C0, c.family.value_or(KernelFamily::S), FrequencyGrid{},
                            opts_for(c));
  v.require(s.singular_set().empty(), "singular points " + std::to_string(s.singular_set().size()) + " (regular " +
                                          std::to_string(s.count(Status::Regular)) + ", undecided " +
                                          std::to_string(s.count(Status::Undecided)) + ")");
  return v;
}

Verdict ac4() {
  Verdict v;
  SpectrumCache cache;
  auto r = check_pole_localization(SuiteOptions{}, cache);
  v.require(passed(r), why(r) + " " + r.details.at("spectra").dump());
  return v;
}

Verdict ac5() {
  Verdict v;
  SuiteOptions o;
  SpectrumCache cache;
  std::size_t viol = 0, fails = 0, n = 0;
  std::string first;
  for (auto& c : builtin_corpus()) {
    auto r = check_inclusion_chain(c, o, cache);
    ++n;
    if (r.details.contains("violation_count")) viol += r.details["violation_count"].get<std::size_t>();
    if (r.status == CheckStatus::Fail && fails++ == 0) first = why(r);
  }
  v.require(viol == 0 && fails == 0, std::to_string(viol) + " violations over " + std::to_string(n) + " signals" +
                                          (first.empty() ? "" : ", " + first));
  return v;
}

Verdict ac6() {
  Verdict v;
  SuiteOptions o;
  SpectrumCache cache;
  std::size_t mod = 0, tr = 0, conv = 0, total = 0;
  std::string first;
  auto note = [&](const CheckResult& r, std::size_t& bad) {
    ++total;
    if (!passed(r) && bad++ == 0 && first.empty()) first = why(r);
  };
  for (const char* n : {"exp_iw1", "aap_mix", "ap_sum"}) {
    CorpusSignal c = make_corpus_signal(n);
    for (double lam : {-1.0, 0.5, 2.0}) note(check_modulation_shift(c, lam, o, cache), mod);
    for (double s : {1.0, 5.0, 20.0}) note(check_translation_invariance(c, s, o, cache), tr);
    note(check_convolution_shrinking(c, bump_kernel(KernelSampling{c.signal.dt()}), o, cache), conv);
  }
  v.require(mod == 0, "modulation-shift mismatches " + std::to_string(mod) + "/9");
  v.require(tr == 0, "translation mismatches " + std::to_string(tr) + "/9");
  v.require(conv == 0, "convolution-shrinking failures " + std::to_string(conv) + "/3" +
                           (first.empty() ? "" : ", " + first));
  return v;
}

Verdict ac7() {
  Verdict v;
  SuiteOptions o;
  for (const char* n : {"decay_exp", "exp_iw1", "chirp"}) {
    auto r = check_transform_identities(make_corpus_signal(n), o, 20);
    double tol = r.details.at("tolerance").get<double>();
    double ws = r.details.at("max_shift_residual").get<double>();
    double wm = r.details.at("max_mollifier_residual").get<double>();
    v.require(passed(r) && ws <= tol && wm <= tol,
              std::string(n) + " residuals " + num(ws) + "/" + num(wm) + " <= " + num(tol));
  }
  // e^{-t}: the trapezoid sum over [0, T] is a geometric series in q = e^{-(lambda+1) dt}
  CorpusSignal d = make_corpus_signal("decay_exp");
  const SampledSignal f = d.half_line();
  const double dt = f.dt(), T = f.t_end();
  double worst = 0, cont = 0;
  for (double re : {0.05, 0.2, 0.5})
    for (double im : {-4.0, 0.0, 3.0}) {
      cplx l(re, im);
      cplx q = std::exp(-(l + 1.0) * dt), qN = std::exp(-(l + 1.0) * T);
      cplx trap = dt * ((1.0 - qN * q) / (1.0 - q) - 0.5 * (1.0 + qN));
      cplx got = laplace_transform(f, l).value[0];
      worst = std::max(worst, std::abs(got - trap));
      cont = std::max(cont, std::abs(got - 1.0 / (l + 1.0)));
    }
  v.require(worst <= 1e-12, "e^{-t} transform vs exact trapezoid sum " + num(worst) +
                                " (vs 1/(lambda+1): " + num(cont) + ", O(dt^2))");
  return v;
}

Verdict ac8() {
  Verdict v;
  SuiteOptions o;
  KernelSampling s{0.05};
  struct Case {
    std::string name;
    TestKernel f;
    Interval K;
  };
  std::vector<Case> cases{{"bump", bump_kernel(s), {-1.0, 1.0}},
                          {"bandpass(0,1)", bandpass_kernel(0.0, 1.0, s), {-0.5, 0.5}},
                          {"bandpass(2,0.5)", bandpass_kernel(2.0, 0.5, s), {1.6, 2.4}}};
  for (auto& c : cases) {
    auto r = check_wiener_division(c.name, c.f, c.K, o);
    double res = r.details.at("residual").get<double>();
    v.require(passed(r) && res <= 1e-8, c.name + " residual " + num(res));
  }
  // independent transform of the bump
  TestKernel g = wiener_divide(cases[0].f, cases[0].K, WienerOptions{o.eps_div});
  double worst = 0;
  for (int j = 0; j <= 200; ++j) {
    double w = -1.0 + 0.01 * j;
    worst = std::max(worst, std::abs(g.ft(w) * oracle::psi_hat(w) - 1.0));
  }
  v.require(worst <= 1e-8, "bump with quadrature transform " + num(worst));
  return v;
}

Verdict ac9() {
  Verdict v;
  auto r = check_approximate_identity(SuiteOptions{});
  auto errs = r.details.at("conv_error").get<std::vector<double>>();
  bool mono = true;
  for (std::size_t k = 1; k < errs.size(); ++k) mono = mono && errs[k] < errs[k - 1];
  v.require(mono, "errors " + num(errs[0]) + " > " + num(errs[1]) + " > " + num(errs[2]) + " > " + num(errs[3]));
  v.require(errs.back() <= 0.05, "n=8 error " + num(errs.back()) + " <= 0.05");
  // u * psi_n - u = (psi_hat(1/n) - 1) u
  const int ns[] = {1, 2, 4, 8};
  double gap = 0;
  for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, std::abs(errs[k] - std::abs(oracle::psi_hat(1.0 / ns[k]) - 1.0)));
  v.require(gap <= 1e-6, "vs |psi_hat(1/n) - 1| " + num(gap));
  double em = r.details.at("mollifier_error_h0.01").get<double>();
  v.require(em <= 0.02, "mollifier error " + num(em) + " <= 0.02");
  v.require(passed(r), why(r));
  return v;
}

Verdict ac10() {
  Verdict v;
  auto r = check_ergodic_mean(SuiteOptions{});
  double m = r.details.at("mean_norm").get<double>();
  auto dev = r.details.at("deviation").get<std::vector<double>>();
  v.require(m <= 1e-2, "mean norm " + num(m) + " <= 1e-2");
  v.require(dev[0] > dev[1] && dev[1] > dev[2],
            "deviation " + num(dev[0]) + " > " + num(dev[1]) + " > " + num(dev[2]));
  v.require(passed(r), why(r));
  return v;
}

Verdict ac11() {
  Verdict v;
  auto r = check_ap_coefficient(SuiteOptions{});
  auto a = r.details.at("coefficient").get<std::vector<double>>();
  const double ref = oracle::psi_hat(1.0);
  double err = std::abs(cplx(a[0], a[1]) - ref);
  v.require(err <= 1e-2, "coefficient vs quadrature psi_hat(1)=" + num(ref) + " off by " + num(err));
  v.require(r.details.at("remainder").at("member") == "yes", "remainder c0 " + r.details.at("remainder").at("member").get<std::string>());
  v.require(passed(r), why(r));
  return v;
}

Verdict ac12() {
  Verdict v;
  SuiteOptions o;
  auto inst = random_evolution_instances(o.seed, 20, o.evolution_tmax, o.evolution_dt);
  std::size_t bad = 0, resid = 0;
  double worst = 0;
  std::string first;
  for (auto& e : inst) {
    auto r = check_evolution(e, o);
    double res = r.details.at("residual").get<double>();
    double sup = r.details.at("sup_norm").get<double>();
    worst = std::max(worst, res / (1.0 + sup));
    if (res > 1e-5 * (1.0 + sup)) ++resid;
    if (!passed(r) && bad++ == 0) first = why(r);
  }
  v.require(inst.size() == 20, std::to_string(inst.size()) + " instances");
  v.require(bad == 0, std::to_string(bad) + " inclusion violations" + (first.empty() ? "" : ", " + first));
  v.require(resid == 0, "max residual/(1+|u|) " + num(worst) + " <= 1e-5");
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  // optional arguments select criteria by label, e.g. AC7
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"AC1 chirp: carleman full, laplace empty, M_h chirp in C0", ac1},
      {"AC2 e^t annihilator and growth constant", ac2},
      {"AC3 (1+t)^-1 e^{it}: empty reduced C0 spectrum", ac3},
      {"AC4 pole localization for e^{it}", ac4},
      {"AC5 inclusion chain over the corpus", ac5},
      {"AC6 spectral algebra", ac6},
      {"AC7 transform identities", ac7},
      {"AC8 Wiener division", ac8},
      {"AC9 approximate identity and mollifier limit", ac9},
      {"AC10 chirp ergodic mean", ac10},
      {"AC11 AP coefficient of F*psi", ac11},
      {"AC12 random evolution instances", ac12},
  };
  // arguments: criterion labels (e.g. AC7) and an optional --report <path> copy of the output
  std::vector<std::string> labels;
  std::FILE* report = nullptr;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--report" && i + 1 < argc) report = std::fopen(argv[++i], "w");
    else labels.push_back(a);
  }
  auto selected = [&](const std::string& name) {
    if (labels.empty()) return true;
    std::string label = name.substr(0, name.find(' '));
    return std::find(labels.begin(), labels.end(), label) != labels.end();
  };
  auto emit = [&](const std::string& line) {
    std::fputs(line.c_str(), stdout);
    std::fflush(stdout);
    if (report) {
      std::fputs(line.c_str(), report);
      std::fflush(report);
    }
  };
  int failed = 0, ran = 0;
  for (auto& [name, fn] : criteria) {
    if (!selected(name)) continue;
    ++ran;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note = std::string("exception: ") + e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", sec);
    emit(std::string(v.pass ? "PASS " : "FAIL ") + name + " | " + v.note + " | " + t + "\n");
    failed += v.pass ? 0 : 1;
  }
  emit(std::to_string(ran - failed) + "/" + std::to_string(ran) + " criteria passed\n");
  if (report) std::fclose(report);
  return failed == 0 ? 0 : 1;
}
