#include <doctest.h>

#include <cmath>

#include "redspec/evolution.hpp"

using namespace redspec;

TEST_SUITE("evolution") {
  TEST_CASE("scalar damped forced equation") {
    // u' = -u + e^{it}, u(0) = 0  =>  u = (e^{it} - e^{-t}) / (1 + i)
    EvolutionProblem p;
    p.A = Eigen::MatrixXcd::Constant(1, 1, -1.0);
    p.u0 = Eigen::VectorXcd::Zero(1);
    p.phi = SampledSignal::generate(Domain::HalfLine, 0.0, 0.005, 4001, 1,
                                    [](double t, cplx* v) { v[0] = std::polar(1.0, t); });
    auto s = solve_evolution(p);
    double err = 0, sup = 0;
    for (std::size_t i = 0; i < s.u.size(); ++i) {
      double t = s.u.time(i);
      cplx ref = (std::polar(1.0, t) - std::exp(-t)) / cplx(1.0, 1.0);
      err = std::max(err, std::abs(s.u.at(i) - ref));
      sup = std::max(sup, std::abs(ref));
    }
    CHECK(err < 1e-8);
    CHECK(s.residual < 1e-6);
    CHECK(s.sup_norm == doctest::Approx(sup).epsilon(1e-6));
  }

  TEST_CASE("oscillator with imaginary eigenvalues") {
    EvolutionProblem p;
    p.A.resize(2, 2);
    p.A << 0.0, 1.0, -1.0, 0.0;
    p.u0.resize(2);
    p.u0 << 1.0, 0.0;
    p.phi = SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 2001, 2, [](double, cplx* v) { v[0] = v[1] = 0.0; });
    auto s = solve_evolution(p);
    for (std::size_t i = 0; i < s.u.size(); i += 250) {
      double t = s.u.time(i);
      CHECK(std::abs(s.u.at(i, 0) - std::cos(t)) < 1e-9);
      CHECK(std::abs(s.u.at(i, 1) + std::sin(t)) < 1e-9);
    }
    auto ev = eigenvalues(p.A);
    REQUIRE(ev.size() == 2);
    for (auto e : ev) CHECK(std::abs(std::abs(e.imag()) - 1.0) < 1e-12);
  }

  TEST_CASE("residual detects a wrong solution") {
    EvolutionProblem p;
    p.A = Eigen::MatrixXcd::Constant(1, 1, -1.0);
    p.u0 = Eigen::VectorXcd::Ones(1);
    p.phi = SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 1001, 1, [](double, cplx* v) { v[0] = 0.0; });
    auto good = SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 1001, 1,
                                        [](double t, cplx* v) { v[0] = std::exp(-t); });
    auto bad = SampledSignal::generate(Domain::HalfLine, 0.0, 0.01, 1001, 1,
                                       [](double t, cplx* v) { v[0] = std::exp(-0.9 * t); });
    CHECK(evolution_residual(p, good) < 1e-8);
    CHECK(evolution_residual(p, bad) > 1e-2);
  }
}
