#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "redspec/config.hpp"
#include "redspec/corpus.hpp"
#include "redspec/error.hpp"
#include "redspec/io.hpp"
#include "redspec/report.hpp"
#include "redspec/theorems.hpp"

namespace fs = std::filesystem;
using namespace redspec;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct Common {
  std::string config;
  std::string grid;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c, bool with_grid) {
  cmd->add_option("--config", c.config, "flat JSON config; flags override its values");
  if (with_grid) cmd->add_option("--grid", c.grid, "frequency grid min:max:step");
  cmd->add_option("--out", c.out, "output path (stdout when omitted)");
}

Config resolve(const Common& c) {
  Config cfg;
  if (!c.config.empty()) cfg = load_config(c.config, cfg);
  if (!c.grid.empty()) cfg.suite.grid = parse_grid(c.grid);
  return cfg;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) std::cout << text;
  else write_text(out, text);
}

int cmd_synth(const std::string& name, std::optional<double> tmax, std::optional<double> dt,
              std::optional<double> omega0, std::string out) {
  if (!is_corpus_name(name)) fail(ErrorKind::Usage, "unknown corpus signal " + name);
  ojson params = ojson::object();
  if (tmax) params["tmax"] = *tmax;
  if (dt) params["dt"] = *dt;
  if (omega0) params["omega0"] = *omega0;
  CorpusSignal c = make_corpus_signal(name, params);
  if (out.empty()) out = name + ".csv";
  write_corpus_signal(c, out);
  std::cerr << "wrote " << out << " and " << sidecar_path(out) << "\n";
  for (const auto& k : c.kernel_names) {
    // reference export of each registered kernel at omega = 0
    fs::path p(out);
    std::string kp = (p.parent_path() / (p.stem().string() + "_" + k + ".csv")).string();
    write_kernel(kernel_factory(k)(0.0, c.signal.dt()), kp);
    std::cerr << "wrote " << kp << " and " << sidecar_path(kp) << "\n";
  }
  return kOk;
}

int cmd_analyze(const std::string& in, const std::string& kind_s, const std::string& cls_s,
                const std::string& family_s, std::string plot, const Common& common) {
  auto kind = parse_kind(kind_s);
  if (!kind) fail(ErrorKind::Usage, "unknown --kind " + kind_s);
  Config cfg = resolve(common);
  CorpusSignal c = read_corpus_signal(in);
  SpectrumOptions so = cfg.suite.spectra;
  so.extra_kernels = c.kernels;
  const FrequencyGrid& g = cfg.suite.grid;
  SpectrumEstimate s;
  switch (*kind) {
    case SpectrumKind::Reduced: {
      if (cls_s.empty()) fail(ErrorKind::Usage, "--class is required for --kind reduced");
      auto cls = parse_class(cls_s);
      if (!cls) fail(ErrorKind::Usage, "unknown --class " + cls_s);
      KernelFamily fam = c.family.value_or(KernelFamily::S);
      if (!family_s.empty()) {
        auto f = parse_family(family_s);
        if (!f) fail(ErrorKind::Usage, "unknown --family " + family_s);
        fam = *f;
      }
      s = reduced_spectrum(c.half_line(), *cls, fam, g, so);
      break;
    }
    case SpectrumKind::Beurling: s = beurling_spectrum(c.signal, g, so); break;
    case SpectrumKind::Carleman: s = carleman_spectrum(c.carleman_input(), g, so); break;
    case SpectrumKind::Laplace: s = laplace_spectrum(c.half_line(), g, so); break;
    case SpectrumKind::WeakLaplace: s = weak_laplace_spectrum(c.half_line(), g, so); break;
  }
  emit(common.out, dump_report(s.to_json()));
  if (plot.empty() && !common.out.empty()) {
    fs::path p(common.out);
    plot = (p.parent_path() / (p.stem().string() + "_plot.csv")).string();
  }
  if (!plot.empty()) write_text(plot, plot_csv(s));
  return kOk;
}

int cmd_classify(const std::string& in, const std::string& cls_s, const Common& common) {
  auto cls = parse_class(cls_s);
  if (!cls) fail(ErrorKind::Usage, "unknown --class " + cls_s);
  Config cfg = resolve(common);
  CorpusSignal c = read_corpus_signal(in);
  DetectOptions o;
  o.tol = cfg.suite.spectra.tol;
  ClassReport r = detect(c.half_line(), *cls, o);
  emit(common.out, dump_report(r.to_json()));
  return kOk;
}

int cmd_verify(const std::string& dir, bool builtin, const std::string& only, const Common& common) {
  if (builtin == !dir.empty()) fail(ErrorKind::Usage, "give exactly one of a corpus directory or --builtin");
  Config cfg = resolve(common);
  std::optional<std::string> sel;
  if (!only.empty()) {
    if (!is_check_id(only)) fail(ErrorKind::Usage, "unknown check id " + only);
    sel = only;
  }
  std::vector<CorpusSignal> corpus = builtin ? builtin_corpus() : read_corpus_dir(dir);
  auto results = run_suite(corpus, cfg.suite, sel);
  emit(common.out, dump_report(to_json(results)));
  std::size_t pass = 0, fail_n = 0, vac = 0;
  for (auto& r : results) {
    if (r.status == CheckStatus::Pass) ++pass;
    else if (r.status == CheckStatus::Fail) ++fail_n;
    else ++vac;
  }
  std::cerr << "pass " << pass << ", fail " << fail_n << ", vacuous " << vac << "\n";
  return any_failed(results) ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced spectra of functions on the half-line"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "write a corpus signal as CSV plus metadata");
  std::string s_name, s_out;
  std::optional<double> s_tmax, s_dt, s_w0;
  synth->add_option("name", s_name, "corpus signal name")->required();
  synth->add_option("--tmax", s_tmax, "record length");
  synth->add_option("--dt", s_dt, "sample spacing");
  synth->add_option("--omega0", s_w0, "frequency for exp_iw*");
  synth->add_option("--out", s_out, "CSV path (default <name>.csv)");
  synth->add_flag_callback("--list", [] {
    for (auto& n : corpus_names()) std::cout << n << "\n";
    std::exit(0);
  }, "list corpus names");

  auto* analyze = app.add_subcommand("analyze", "estimate a spectrum of a signal CSV");
  std::string a_in, a_kind, a_class, a_family, a_plot;
  Common a_common;
  analyze->add_option("input", a_in, "signal CSV")->required();
  analyze->add_option("--kind", a_kind, "reduced|beurling|carleman|laplace|weak-laplace")->required();
  analyze->add_option("--class", a_class, "function class for --kind reduced");
  analyze->add_option("--family", a_family, "kernel family D|S|L1 (default from metadata, else S)");
  analyze->add_option("--plot", a_plot, "plot CSV path (default <out>_plot.csv)");
  add_common(analyze, a_common, true);

  auto* classify = app.add_subcommand("classify", "decide membership of a signal in a function class");
  std::string c_in, c_class;
  Common c_common;
  classify->add_option("input", c_in, "signal CSV")->required();
  classify->add_option("--class", c_class, "function class")->required();
  add_common(classify, c_common, false);

  auto* verify = app.add_subcommand("verify", "run the theorem checks");
  std::string v_dir, v_only;
  bool v_builtin = false;
  Common v_common;
  verify->add_option("corpus_dir", v_dir, "directory of signal CSV files");
  verify->add_flag("--builtin", v_builtin, "use the built-in corpus");
  verify->add_option("--only", v_only, "run a single check id");
  add_common(verify, v_common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*synth) return cmd_synth(s_name, s_tmax, s_dt, s_w0, s_out);
    if (*analyze) return cmd_analyze(a_in, a_kind, a_class, a_family, a_plot, a_common);
    if (*classify) return cmd_classify(c_in, c_class, c_common);
    if (*verify) return cmd_verify(v_dir, v_builtin, v_only, v_common);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
