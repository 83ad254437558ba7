#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "redspec/convolution.hpp"

using namespace redspec;

TEST_SUITE("convolution") {
  TEST_CASE("exponential eigenfunction") {
    const double w = 0.8;
    auto f = SampledSignal::generate(Domain::FullLine, -600.0, 0.01, 120001, 1,
                                     [w](double t, cplx* v) { v[0] = std::polar(1.0, w * t); });
    auto k = bump_kernel();
    auto c = convolve(extend_by_zero(f, f.t0()), k);
    auto v = c.valid();
    REQUIRE(v.size() > 1000);
    const cplx kh = oracle::psi_hat(w);
    double err = 0;
    for (std::size_t i = 0; i < v.size(); ++i) err = std::max(err, std::abs(v.at(i) - std::polar(1.0, w * v.time(i)) * kh));
    CHECK(err < 1e-6);
    CHECK(c.truncated_count() > 0);
  }

  TEST_CASE("half-line restriction sees the zero extension") {
    auto f = SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 20001, 1, [](double, cplx* v) { v[0] = 1.0; });
    auto g = convolve_restricted(f, bump_kernel());
    REQUIRE(g.size() > 0);
    CHECK(g.t0() >= 0.0);
    double far = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.time(i) > 100.0) far = std::max(far, std::abs(g.at(i) - 1.0));
    CHECK(far < 1e-6);
    // near the origin (1*k)(0) is the mass of psi on (-inf, 0], i.e. 1/2 by symmetry
    auto i0 = g.index_of(0.0);
    REQUIRE(i0.has_value());
    CHECK(std::abs(g.at(*i0) - 0.5) < 1e-6);
  }

  TEST_CASE("box kernel is a moving average") {
    auto f = SampledSignal::generate(Domain::FullLine, -10.0, 0.01, 2001, 1, [](double t, cplx* v) { v[0] = t; }, 1);
    auto c = convolve(extend_by_zero(f, f.t0()), BoxKernel(0.5));
    auto v = c.valid();
    REQUIRE(v.size() > 100);
    for (std::size_t i = 0; i < v.size(); i += 101) CHECK(std::abs(v.at(i) - (v.time(i) + 0.25)) < 1e-9);
  }

  TEST_CASE("stride and window") {
    auto f = SampledSignal::generate(Domain::FullLine, -50.0, 0.01, 10001, 1, [](double, cplx* v) { v[0] = 2.0; });
    ConvolveOptions o;
    o.stride = 10;
    o.t_lo = -10.0;
    o.t_hi = 10.0;
    auto c = convolve(extend_by_zero(f, f.t0()), bump_kernel(), o);
    CHECK(c.signal.dt() == doctest::Approx(0.1));
    CHECK(c.signal.t0() == doctest::Approx(-10.0));
    CHECK(c.signal.t_end() == doctest::Approx(10.0));
    CHECK(std::abs(c.signal.at(100) - 2.0) < 1e-6);
  }
}
