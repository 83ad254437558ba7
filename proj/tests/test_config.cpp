#include <doctest.h>

#include "redspec/config.hpp"
#include "redspec/error.hpp"

using namespace redspec;

TEST_SUITE("config") {
  TEST_CASE("grid parsing") {
    auto g = parse_grid("-2:3:0.25");
    CHECK(g.min == -2.0);
    CHECK(g.max == 3.0);
    CHECK(g.step == 0.25);
    for (const char* bad : {"", "1:2", "a:b:c", "2:1:0.1", "0:1:0", "0:1:-1", "0:1:0.1:3"}) {
      INFO(bad);
      CHECK_THROWS_AS(parse_grid(bad), Error);
    }
  }

  TEST_CASE("keys apply on top of the base") {
    Config base;
    base.suite.tol_ode = 1e-3;
    auto c = apply_config(ojson::parse(R"({"tol_c0": 0.002, "grid": "0:1:0.5", "seed": 5, "a_seq": [0.3, 0.1]})"), base);
    CHECK(c.suite.spectra.tol.tol_c0 == 0.002);
    CHECK(c.suite.grid.size() == 3);
    CHECK(c.suite.seed == 5);
    CHECK(c.suite.spectra.a_seq == std::vector<double>{0.3, 0.1});
    CHECK(c.suite.tol_ode == 1e-3);
  }

  TEST_CASE("invalid configurations") {
    for (const char* bad : {R"({"tol_c00": 1})", R"({"tol_c0": -1})", R"({"tol_c0": "x"})",
                            R"({"a_seq": [0.1, 0.2]})", R"({"seed": -3})", R"({"nested": {"a": 1}})",
                            R"([1, 2])"}) {
      INFO(bad);
      CHECK_THROWS_AS(apply_config(ojson::parse(bad)), Error);
    }
  }

  TEST_CASE("json round trip") {
    Config c;
    c.suite.tol_wiener = 1e-9;
    auto j = config_to_json(c);
    auto r = apply_config(j);
    CHECK(r.suite.tol_wiener == 1e-9);
    CHECK(config_to_json(r) == j);
  }
}
