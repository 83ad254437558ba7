#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "redspec/corpus.hpp"
#include "redspec/error.hpp"

using namespace redspec;

TEST_SUITE("corpus") {
  TEST_CASE("names are registered") {
    auto names = corpus_names();
    CHECK(names.size() >= 15);
    for (auto& n : names) CHECK(is_corpus_name(n));
    CHECK_FALSE(is_corpus_name("nope"));
    CHECK_THROWS_AS(make_corpus_signal("nope"), Error);
  }

  TEST_CASE("parameters override the record") {
    auto c = make_corpus_signal("exp_iw1", ojson{{"tmax", 50.0}, {"dt", 0.1}});
    CHECK(c.signal.dt() == doctest::Approx(0.1));
    CHECK(c.half_line().t_end() == doctest::Approx(50.0));
    auto m = c.metadata();
    CHECK(m["name"] == "exp_iw1");
    CHECK(m.contains("expectations"));
    CHECK(m.contains("kernels"));
  }

  TEST_CASE("chirp tail against quadrature") {
    // int_x^inf e^{is^2} = int_0^inf - int_0^x, with int_0^inf = sqrt(pi/8)(1+i)
    const cplx full = std::sqrt(std::numbers::pi / 8.0) * cplx(1.0, 1.0);
    for (double x : {0.0, 0.5, 3.0, 7.9, 8.1, 20.0}) {
      cplx ref = full - oracle::fresnel(0.0, x);
      INFO(x);
      CHECK(std::abs(chirp_tail(x) - ref) < 1e-10);
    }
  }

  TEST_CASE("mollified chirp against quadrature") {
    const double h = 0.5;
    auto m = mollified_chirp(h, 40.0, 0.5);
    for (std::size_t i = 0; i < m.size(); i += 13) {
      double t = m.time(i);
      cplx ref = oracle::fresnel(t, t + h) / h;
      CHECK(std::abs(m.at(i) - ref) < 1e-10);
    }
  }

  TEST_CASE("kernel registry") {
    auto f = kernel_factory("annihilator");
    auto k = f(1.0, 0.01);
    CHECK(std::abs(k.ft(1.0) - 1.0) < 1e-10);
    CHECK_THROWS_AS(kernel_factory("missing"), Error);
    auto e = make_corpus_signal("expgrow");
    CHECK(e.kernels.size() == e.kernel_names.size());
  }

  TEST_CASE("half-line and carleman inputs") {
    auto c = make_corpus_signal("decay_exp", ojson{{"tmax", 20.0}});
    CHECK(c.half_line().domain() == Domain::HalfLine);
    CHECK(c.carleman_input().t0() == 0.0);
    auto w = make_corpus_signal("exp_iw1", ojson{{"tmax", 20.0}});
    REQUIRE(w.two_sided.has_value());
    CHECK(w.carleman_input().domain() == Domain::FullLine);
    auto r = restrict_half_line(w.carleman_input());
    CHECK(r.t0() == 0.0);
    CHECK(r.domain() == Domain::HalfLine);
  }
}
