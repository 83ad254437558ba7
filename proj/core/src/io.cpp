#include "redspec/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void parse_error(const std::string& path, std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, path + ":" + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view s, const std::string& path, std::size_t line) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    parse_error(path, line, "not a number: '" + std::string(s) + "'");
  if (!std::isfinite(v)) parse_error(path, line, "non-finite value");
  return v;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t c = s.find(',', pos);
    out.push_back(s.substr(pos, c == std::string_view::npos ? std::string_view::npos : c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

ojson read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ojson::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
}

std::string fmt17(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", x);
  return b;
}

}  // namespace

void write_text(const std::string& path, const std::string& text) {
  std::error_code ec;
  auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write " + path);
  out << text;
  if (!out) fail(ErrorKind::Parse, "write failed for " + path);
}

void write_signal_csv(const SampledSignal& f, const std::string& path) {
  std::string s = "t";
  for (std::size_t c = 0; c < f.dim(); ++c) s += ",re" + std::to_string(c) + ",im" + std::to_string(c);
  s += '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    s += fmt17(f.time(i));
    for (std::size_t c = 0; c < f.dim(); ++c) {
      s += ',';
      s += fmt17(f.at(i, c).real());
      s += ',';
      s += fmt17(f.at(i, c).imag());
    }
    s += '\n';
  }
  write_text(path, s);
}

SampledSignal read_signal_csv(const std::string& path, std::optional<Domain> domain,
                              std::optional<std::optional<int>> growth) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::string line;
  std::size_t ln = 0;
  if (!std::getline(in, line)) parse_error(path, 1, "empty file");
  ++ln;
  auto head = split(line);
  if (head.size() < 3 || head.size() % 2 == 0 || trim(std::string(head[0])) != "t")
    parse_error(path, ln, "header must be t,re0,im0[,re1,im1,...]");
  const std::size_t d = (head.size() - 1) / 2;
  for (std::size_t c = 0; c < d; ++c) {
    if (trim(std::string(head[1 + 2 * c])) != "re" + std::to_string(c) ||
        trim(std::string(head[2 + 2 * c])) != "im" + std::to_string(c))
      parse_error(path, ln, "header must be t,re0,im0[,re1,im1,...]");
  }
  std::vector<double> ts;
  std::vector<cplx> v;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++ln;
    if (trim(line).empty()) continue;
    auto cols = split(line);
    if (cols.size() != head.size())
      parse_error(path, ln, "expected " + std::to_string(head.size()) + " columns, found " + std::to_string(cols.size()));
    ts.push_back(parse_number(cols[0], path, ln));
    for (std::size_t c = 0; c < d; ++c)
      v.emplace_back(parse_number(cols[1 + 2 * c], path, ln), parse_number(cols[2 + 2 * c], path, ln));
    lines.push_back(ln);
  }
  if (ts.size() < 2) parse_error(path, ln, "need at least two samples");
  const double dt = (ts.back() - ts.front()) / static_cast<double>(ts.size() - 1);
  if (!(dt > 0)) parse_error(path, lines[1], "t column must increase");
  for (std::size_t i = 1; i < ts.size(); ++i) {
    double step = ts[i] - ts[i - 1];
    if (std::abs(step - dt) > 1e-9 * dt) parse_error(path, lines[i], "non-uniform spacing in t");
  }
  Domain dom = domain.value_or(std::abs(ts.front()) <= 1e-9 * dt ? Domain::HalfLine : Domain::FullLine);
  double t0 = ts.front();
  if (dom == Domain::HalfLine) {
    if (std::abs(t0) > 1e-9 * dt) parse_error(path, lines[0], "half-line record must start at t = 0");
    t0 = 0.0;
  }
  std::optional<int> g = 0;
  bool validate = true;
  if (growth) {
    g = *growth;
  } else {
    SampledSignal probe(dom, t0, dt, d, v, std::nullopt, false);
    auto slope = fitted_growth_slope(probe);
    g = slope ? std::max(0, static_cast<int>(std::ceil(*slope - 0.1))) : 0;
    validate = false;
  }
  return SampledSignal(dom, t0, dt, d, std::move(v), g, validate);
}

std::string sidecar_path(const std::string& csv_path) {
  fs::path p(csv_path);
  p.replace_extension(".json");
  return p.string();
}

void write_corpus_signal(const CorpusSignal& c, const std::string& csv_path) {
  write_signal_csv(c.two_sided ? *c.two_sided : c.signal, csv_path);
  write_text(sidecar_path(csv_path), c.metadata().dump(2) + "\n");
}

CorpusSignal read_corpus_signal(const std::string& csv_path) {
  CorpusSignal c;
  const std::string side = sidecar_path(csv_path);
  if (!fs::exists(side)) {
    c.name = fs::path(csv_path).stem().string();
    c.signal = read_signal_csv(csv_path);
    return c;
  }
  ojson m = read_json(side);
  try {
    c.name = m.at("name").get<std::string>();
    c.params = m.value("params", ojson::object());
    const bool two = m.value("two_sided", false);
    const std::string dom = m.at("domain").get<std::string>();
    if (dom != "half-line" && dom != "full-line") fail(ErrorKind::Parse, side + ": unknown domain " + dom);
    std::optional<int> g;
    if (!m.at("growth").is_null()) g = m.at("growth").get<int>();
    Domain d = two || dom == "full-line" ? Domain::FullLine : Domain::HalfLine;
    SampledSignal rec = read_signal_csv(csv_path, d, g);
    if (two) {
      c.two_sided = rec;
      c.signal = restrict_half_line(rec);
    } else {
      c.signal = rec;
    }
    auto fam = parse_family(m.value("family", std::string("S")));
    if (!fam) fail(ErrorKind::Parse, side + ": unknown kernel family");
    if (*fam != KernelFamily::S) c.family = fam;
    for (auto& k : m.value("kernels", ojson::array())) {
      c.kernel_names.push_back(k.get<std::string>());
      c.kernels.push_back(kernel_factory(c.kernel_names.back()));
    }
    for (auto& e : m.value("expectations", ojson::array()))
      c.expectations.push_back(Expectation{e.at("property").get<std::string>(), e.at("value").get<std::string>(),
                                           e.value("provenance", std::string("derived"))});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, side + ": " + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Usage) fail(ErrorKind::Parse, side + ": " + e.what());
    throw;
  }
  return c;
}

std::vector<CorpusSignal> read_corpus_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) fail(ErrorKind::Parse, "not a directory: " + dir);
  std::vector<std::string> files;
  for (auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".csv") continue;
    const std::string side = sidecar_path(e.path().string());
    if (fs::exists(side) && read_json(side).contains("ft_support")) continue;  // kernel export
    files.push_back(e.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(ErrorKind::Parse, "no signal CSV files in " + dir);
  std::vector<CorpusSignal> out;
  for (auto& f : files) out.push_back(read_corpus_signal(f));
  return out;
}

void write_kernel(const TestKernel& k, const std::string& csv_path) {
  write_signal_csv(k.samples(), csv_path);
  Interval s = k.ft_support();
  auto edge = [](double x) { return std::isfinite(x) ? ojson(x) : ojson(nullptr); };
  ojson j{{"family", to_string(k.family())},
          {"ft_support", ojson::array({edge(s.lo), edge(s.hi)})},
          {"cut_mass", k.cut_mass()},
          {"id", k.id()}};
  write_text(sidecar_path(csv_path), j.dump(2) + "\n");
}

KernelFile read_kernel(const std::string& csv_path) {
  KernelFile kf;
  kf.samples = read_signal_csv(csv_path, Domain::FullLine, std::optional<int>(0));
  ojson m = read_json(sidecar_path(csv_path));
  try {
    auto fam = parse_family(m.at("family").get<std::string>());
    if (!fam) fail(ErrorKind::Parse, "unknown kernel family in sidecar");
    kf.family = *fam;
    const ojson& s = m.at("ft_support");
    auto edge = [](const ojson& x, double inf) { return x.is_null() ? inf : x.get<double>(); };
    const double inf = std::numeric_limits<double>::infinity();
    kf.ft_support = Interval{edge(s.at(0), -inf), edge(s.at(1), inf)};
    kf.cut_mass = m.at("cut_mass").get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, sidecar_path(csv_path) + ": " + e.what());
  }
  return kf;
}

}  // namespace redspec
