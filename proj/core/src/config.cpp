#include "redspec/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

namespace {

double positive(const ojson& v, const std::string& key) {
  if (!v.is_number()) fail(ErrorKind::Parse, "config key " + key + " must be a number");
  double x = v.get<double>();
  if (!(x > 0) || !std::isfinite(x)) fail(ErrorKind::Parse, "config key " + key + " must be positive");
  return x;
}

std::vector<double> positive_list(const ojson& v, const std::string& key, bool decreasing) {
  if (!v.is_array() || v.empty()) fail(ErrorKind::Parse, "config key " + key + " must be a non-empty array");
  std::vector<double> out;
  for (auto& x : v) out.push_back(positive(x, key));
  if (decreasing)
    for (std::size_t i = 1; i < out.size(); ++i)
      if (!(out[i] < out[i - 1])) fail(ErrorKind::Parse, "config key " + key + " must be strictly decreasing");
  return out;
}

}  // namespace

FrequencyGrid parse_grid(const std::string& s) {
  double v[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t end = k < 2 ? s.find(':', pos) : s.size();
    if (end == std::string::npos) fail(ErrorKind::Parse, "grid must look like min:max:step, got '" + s + "'");
    std::string part = s.substr(pos, end - pos);
    std::size_t used = 0;
    try {
      v[k] = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) fail(ErrorKind::Parse, "bad number '" + part + "' in grid '" + s + "'");
    pos = end + 1;
  }
  try {
    return FrequencyGrid(v[0], v[1], v[2]);
  } catch (const Error& e) {
    fail(ErrorKind::Parse, std::string("invalid grid: ") + e.what());
  }
}

Config apply_config(const ojson& j, Config c) {
  if (!j.is_object()) fail(ErrorKind::Parse, "config must be a JSON object");
  SuiteOptions& s = c.suite;
  SpectrumOptions& sp = s.spectra;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    const ojson& v = it.value();
    if (v.is_object()) fail(ErrorKind::Parse, "config is flat; key " + k + " holds an object");
    if (k == "tol_c0") sp.tol.tol_c0 = positive(v, k);
    else if (k == "tol_erg") sp.tol.tol_erg = positive(v, k);
    else if (k == "tol_bohr") sp.tol.tol_bohr = positive(v, k);
    else if (k == "tol_uc") sp.tol.tol_uc = positive(v, k);
    else if (k == "tol_match") sp.tol_match = positive(v, k);
    else if (k == "tol_analytic") sp.tol_analytic = positive(v, k);
    else if (k == "tol_tail") sp.tol_tail = positive(v, k);
    else if (k == "tol_conv") s.tol_conv = positive(v, k);
    else if (k == "tol_transform") s.tol_transform = positive(v, k);
    else if (k == "tol_ode") s.tol_ode = positive(v, k);
    else if (k == "tol_wiener") s.tol_wiener = positive(v, k);
    else if (k == "blowup_thresh") sp.blowup_thresh = positive(v, k);
    else if (k == "bandpass_width") sp.bandpass_width = positive(v, k);
    else if (k == "output_step") sp.output_step = positive(v, k);
    else if (k == "window") sp.window = positive(v, k);
    else if (k == "eps_div") s.eps_div = positive(v, k);
    else if (k == "a_seq") sp.a_seq = positive_list(v, k, true);
    else if (k == "delta_seq") sp.delta_seq = positive_list(v, k, true);
    else if (k == "eps_seq") sp.eps_seq = positive_list(v, k, false);
    else if (k == "grid") {
      if (!v.is_string()) fail(ErrorKind::Parse, "config key grid must be a string min:max:step");
      s.grid = parse_grid(v.get<std::string>());
    } else if (k == "seed") {
      if (!v.is_number_unsigned()) fail(ErrorKind::Parse, "config key seed must be a non-negative integer");
      s.seed = v.get<std::uint64_t>();
    } else if (k == "evolution_instances") {
      if (!v.is_number_unsigned()) fail(ErrorKind::Parse, "config key evolution_instances must be a non-negative integer");
      s.evolution_instances = v.get<std::size_t>();
    } else {
      fail(ErrorKind::Parse, "unknown config key " + k);
    }
  }
  return c;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  ojson j;
  try {
    j = ojson::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return apply_config(j, std::move(base));
}

ojson config_to_json(const Config& c) {
  const SuiteOptions& s = c.suite;
  const SpectrumOptions& sp = s.spectra;
  std::ostringstream g;
  g.precision(12);
  g << s.grid.min << ':' << s.grid.max << ':' << s.grid.step;
  return ojson{{"tol_c0", sp.tol.tol_c0},
               {"tol_erg", sp.tol.tol_erg},
               {"tol_bohr", sp.tol.tol_bohr},
               {"tol_uc", sp.tol.tol_uc},
               {"tol_match", sp.tol_match},
               {"tol_analytic", sp.tol_analytic},
               {"tol_tail", sp.tol_tail},
               {"tol_conv", s.tol_conv},
               {"tol_transform", s.tol_transform},
               {"tol_ode", s.tol_ode},
               {"tol_wiener", s.tol_wiener},
               {"grid", g.str()},
               {"a_seq", sp.a_seq},
               {"delta_seq", sp.delta_seq},
               {"eps_seq", sp.eps_seq},
               {"seed", s.seed},
               {"blowup_thresh", sp.blowup_thresh},
               {"bandpass_width", sp.bandpass_width},
               {"output_step", sp.output_step},
               {"window", sp.window},
               {"eps_div", s.eps_div},
               {"evolution_instances", s.evolution_instances}};
}

}  // namespace redspec
