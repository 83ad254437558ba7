#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "redspec/spectra.hpp"

using namespace redspec;

namespace {
template <class Fn>
SampledSignal half(double T, double dt, Fn fn) {
  auto n = static_cast<std::size_t>(std::llround(T / dt)) + 1;
  return SampledSignal::generate(Domain::HalfLine, 0.0, dt, n, 1, [&](double t, cplx* v) { v[0] = fn(t); });
}
const cplx I(0.0, 1.0);
}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("laplace closed forms") {
    auto d = half(200, 0.005, [](double t) { return cplx(std::exp(-t)); });
    for (cplx l : {cplx(0.5, 0.0), cplx(0.2, 1.5), cplx(1.0, -3.0)}) {
      auto v = laplace_transform(d, l);
      CHECK(std::abs(v.value[0] - 1.0 / (l + 1.0)) < 1e-5);
    }
    auto e = half(400, 0.005, [](double t) { return std::polar(1.0, t); });
    for (cplx l : {cplx(0.1, 0.0), cplx(0.3, 2.0)}) {
      auto v = laplace_transform(e, l);
      CHECK(std::abs(v.value[0] - 1.0 / (l - I)) < 1e-4 + v.tail_bound);
      CHECK(v.tail_bound >= 0.0);
    }
  }

  TEST_CASE("laplace against quadrature for the bump") {
    auto r = half(2.0, 1e-4, [](double t) { return cplx(oracle::raw_bump(t - 1.0)); });
    cplx l(0.3, 0.7);
    double re = oracle::integrate([l](double t) { return (std::exp(-l * t) * oracle::raw_bump(t - 1.0)).real(); }, 0, 2);
    double im = oracle::integrate([l](double t) { return (std::exp(-l * t) * oracle::raw_bump(t - 1.0)).imag(); }, 0, 2);
    CHECK(std::abs(laplace_transform(r, l).value[0] - cplx(re, im)) < 1e-8);
  }

  TEST_CASE("chirp-z line agrees with direct evaluation") {
    auto e = half(100, 0.01, [](double t) { return std::exp(-0.1 * t) * std::polar(1.0, 0.5 * t); });
    auto line = laplace_line(e, 0.2, -1.0, 0.1, 21);
    REQUIRE(line.size() == 21);
    for (std::size_t j = 0; j < 21; j += 5) {
      cplx l(0.2, -1.0 + 0.1 * static_cast<double>(j));
      CHECK(std::abs(line[j][0] - laplace_transform(e, l).value[0]) < 1e-9);
    }
  }

  TEST_CASE("carleman transform of a two-sided decay") {
    auto f = SampledSignal::generate(Domain::FullLine, -100.0, 0.005, 40001, 1,
                                     [](double t, cplx* v) { v[0] = std::exp(-std::abs(t)); });
    cplx l(0.5, 1.0);
    CHECK(std::abs(carleman_transform(f, l).value[0] - 1.0 / (l + 1.0)) < 1e-5);
    cplx m(-0.5, 1.0);
    // L- F(l) = -int_{-inf}^0 e^{-l t} e^{t} dt = -1/(1 - l)
    CHECK(std::abs(carleman_transform(f, m).value[0] + 1.0 / (1.0 - m)) < 1e-5);
  }

  TEST_CASE("half-plane scan") {
    auto e = half(400, 0.01, [](double t) { return std::polar(1.0, t); });
    auto g = half_plane_scan(e, {0.0, 1.0, 2.0}, {0.4, 0.2}, Side::Right);
    REQUIRE(g.values.size() >= 1);
    REQUIRE(g.values[0].size() == 2);
    CHECK(std::abs(g.values[0][1][1][0] - 1.0 / cplx(0.2, 0.0)) < 1e-3);
    CHECK(std::abs(g.values[0][0][0][0] - 1.0 / cplx(0.4, -1.0)) < 1e-3);
  }

  TEST_CASE("shift and mollifier identities") {
    auto e = half(400, 0.005, [](double t) { return std::polar(1.0, t * t); });
    for (cplx l : {cplx(0.1, 0.3), cplx(0.4, -2.0)}) {
      CHECK(shift_identity_residual(e, 1.0, l) < 1e-4);
      CHECK(mollifier_identity_residual(e, 0.5, l) < 1e-4);
    }
  }
}
