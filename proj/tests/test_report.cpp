#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "redspec/report.hpp"

using namespace redspec;

TEST_SUITE("report") {
  TEST_CASE("floats are rounded to 12 significant digits") {
    ojson j{{"b", 0.1 + 0.2}, {"a", std::numbers::pi}, {"n", std::numeric_limits<double>::quiet_NaN()}, {"k", 3}};
    auto r = round_floats(j);
    CHECK(r["b"].get<double>() == 0.3);
    CHECK(r["a"].get<double>() == 3.14159265359);
    CHECK(r["n"].is_null());
    CHECK(r["k"] == 3);
    auto s = dump_report(r);
    CHECK(s.back() == '\n');
    CHECK(s.find("\"b\"") < s.find("\"a\""));
    CHECK(dump_report(round_floats(j)) == s);
  }

  TEST_CASE("nested values") {
    ojson j = ojson::array({ojson{{"x", ojson::array({1.0 / 3.0})}}});
    auto r = round_floats(j);
    CHECK(r[0]["x"][0].get<double>() == 0.333333333333);
  }

  TEST_CASE("plot csv") {
    SpectrumEstimate s;
    s.grid = FrequencyGrid(0.0, 1.0, 0.5);
    for (double w : {0.0, 0.5, 1.0}) {
      RegularityCertificate c;
      c.omega = w;
      c.status = w == 0.5 ? Status::Singular : Status::Regular;
      c.metric = w;
      s.certificates.push_back(c);
    }
    auto csv = plot_csv(s);
    CHECK(csv.rfind("omega,status_code,metric\n", 0) == 0);
    CHECK(csv.find("0.5,1,0.5") != std::string::npos);
  }
}
