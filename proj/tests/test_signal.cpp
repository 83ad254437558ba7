#include <doctest.h>

#include <cmath>

#include "redspec/error.hpp"
#include "redspec/signal.hpp"

using namespace redspec;

namespace {
SampledSignal ramp(Domain d, double t0, double dt, std::size_t n) {
  return SampledSignal::generate(d, t0, dt, n, 1, [](double t, cplx* v) { v[0] = {t, -t}; }, 1);
}
}  // namespace

TEST_SUITE("signal") {
  TEST_CASE("lattice indexing") {
    auto f = ramp(Domain::FullLine, -1.0, 0.25, 9);
    CHECK(f.t_end() == doctest::Approx(1.0));
    REQUIRE(f.index_of(0.5).has_value());
    CHECK(*f.index_of(0.5) == 6);
    CHECK_FALSE(f.index_of(0.3).has_value());
    CHECK_FALSE(f.index_of(5.0).has_value());
    CHECK(f.steps(0.75) == 3);
    CHECK_THROWS_AS(f.steps(0.3), Error);
  }

  TEST_CASE("translate, modulate, reflect") {
    auto f = ramp(Domain::FullLine, -2.0, 0.5, 9);
    auto g = translate(f, 1.0);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(g.at(i) - cplx(g.time(i) + 1.0, -(g.time(i) + 1.0))) < 1e-12);
    auto m = modulate(f, 2.0);
    for (std::size_t i = 0; i < m.size(); ++i)
      CHECK(std::abs(m.at(i) - std::polar(1.0, 2.0 * f.time(i)) * f.at(i)) < 1e-12);
    auto r = reflect(f);
    CHECK(r.t0() == doctest::Approx(-2.0));
    CHECK(std::abs(r.at(0) - f.at(f.size() - 1)) < 1e-12);
  }

  TEST_CASE("mollify is exact on linear data") {
    auto f = ramp(Domain::HalfLine, 0.0, 0.01, 1001);
    auto m = mollify(f, 0.5);
    CHECK(m.t_end() == doctest::Approx(9.5));
    for (std::size_t i = 0; i < m.size(); i += 97) {
      double t = m.time(i);
      CHECK(std::abs(m.at(i) - cplx(t + 0.25, -(t + 0.25))) < 1e-10);
    }
  }

  TEST_CASE("indefinite integral of cos") {
    auto f = SampledSignal::generate(Domain::HalfLine, 0.0, 1e-3, 5001, 1,
                                     [](double t, cplx* v) { v[0] = std::cos(t); });
    auto P = indefinite_integral(f);
    double err = 0;
    for (std::size_t i = 0; i < P.size(); ++i) err = std::max(err, std::abs(P.at(i) - std::sin(P.time(i))));
    CHECK(err < 1e-6);
  }

  TEST_CASE("zero extension") {
    auto f = ramp(Domain::HalfLine, 0.0, 0.5, 5);
    auto e = extend_by_zero(f, -2.0);
    CHECK(e.known(-3));
    CHECK(std::abs(*e.row(-3)) == 0.0);
    auto m = e.materialize();
    CHECK(m.size() == 9);
    CHECK(m.t0() == doctest::Approx(-2.0));
    CHECK(std::abs(m.at(8) - f.at(4)) < 1e-15);
  }

  TEST_CASE("growth validation") {
    CHECK_THROWS_AS(SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 2001, 1,
                                            [](double t, cplx* v) { v[0] = std::exp(t); }, 0),
                    Error);
    auto s = SampledSignal::generate(Domain::HalfLine, 0.0, 0.1, 10001, 1,
                                     [](double t, cplx* v) { v[0] = 1.0 + t * t; }, 1);
    auto slope = fitted_growth_slope(s);
    REQUIRE(slope.has_value());
    CHECK(*slope == doctest::Approx(1.0).epsilon(0.1));
  }

  TEST_CASE("add and scale") {
    auto f = ramp(Domain::FullLine, 0.0, 1.0, 4);
    auto g = add(f, scale(f, 2.0), -0.5);
    CHECK(g.sup_norm() < 1e-15);
  }
}
