#include "redspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace redspec {

namespace {

double round12(double x) {
  char b[32];
  std::snprintf(b, sizeof b, "%.12g", x);
  return std::strtod(b, nullptr);
}

std::string fmt12(double x) {
  if (!std::isfinite(x)) return "nan";
  char b[32];
  std::snprintf(b, sizeof b, "%.12g", x);
  return b;
}

}  // namespace

ojson round_floats(const ojson& j) {
  if (j.is_number_float()) {
    double x = j.get<double>();
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
  }
  if (j.is_array()) {
    ojson a = ojson::array();
    for (auto& x : j) a.push_back(round_floats(x));
    return a;
  }
  if (j.is_object()) {
    ojson o = ojson::object();
    for (auto it = j.begin(); it != j.end(); ++it) o[it.key()] = round_floats(it.value());
    return o;
  }
  return j;
}

std::string dump_report(const ojson& j) { return round_floats(j).dump(2) + "\n"; }

std::string plot_csv(const SpectrumEstimate& s) {
  std::string out = "omega,status_code,metric\n";
  for (auto& c : s.certificates) {
    out += fmt12(c.omega);
    out += ',';
    out += std::to_string(status_code(c.status));
    out += ',';
    out += fmt12(c.metric);
    out += '\n';
  }
  return out;
}

}  // namespace redspec
