#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "redspec/kernels.hpp"

using namespace redspec;

TEST_SUITE("kernels") {
  TEST_CASE("bump normalization against quadrature") {
    CHECK(bump::normalization() == doctest::Approx(oracle::bump_a()).epsilon(1e-10));
    CHECK(bump::raw_mass() == doctest::Approx(oracle::raw_mass()).epsilon(1e-10));
  }

  TEST_CASE("phi_hat and psi_hat against quadrature") {
    for (double w : {0.0, 0.3, 1.0, 2.5, 7.0}) CHECK(std::abs(bump::phi_hat(w) - oracle::phi_hat(w)) < 1e-9);
    for (double w : {0.0, 0.4, 1.0, 1.7, 1.99, 2.5}) CHECK(std::abs(bump::psi_hat(w) - oracle::psi_hat(w)) < 1e-9);
    CHECK(bump::psi_hat(0.0) == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("rho moments") {
    CHECK(bump::rho_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bump::rho_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-10));
    double w = 1.3;
    double re = oracle::integrate([w](double t) { return oracle::raw_bump(t) * std::cos(w * t); }, -1, 1) /
                oracle::raw_mass();
    CHECK(std::abs(bump::rho_hat(w) - re) < 1e-9);
  }

  TEST_CASE("plateau") {
    CHECK(bump::plateau(0.0, -1.0, 1.0, 0.25) == doctest::Approx(1.0));
    CHECK(bump::plateau(1.3, -1.0, 1.0, 0.25) == 0.0);
    CHECK(bump::plateau(1.0, -1.0, 1.0, 0.25) == doctest::Approx(0.5).epsilon(1e-9));
  }

  TEST_CASE("sampled kernels match their transforms") {
    for (const auto& k : {bump_kernel(), approximate_identity(4), bandpass_kernel(1.0, 0.5),
                          time_bump_kernel(0.5, 2.0), annihilator_kernel(1.0)}) {
      INFO(k.id());
      CHECK(k.fourier_consistency() <= k.tol_ft() + k.cut_mass());
      CHECK(k.cut_mass() >= 0.0);
    }
  }

  TEST_CASE("box and exponential kernels") {
    BoxKernel b(0.5);
    CHECK(std::abs(b.ft(0.0) - 1.0) < 1e-14);
    ExpKernel e(cplx(0.5, 1.0));
    CHECK(e.right_sided());
    cplx w = 0.7;
    CHECK(std::abs(e.ft(0.7) - 1.0 / (cplx(0.5, 1.0) + cplx(0, 1) * w)) < 1e-12);
    ExpKernel l(cplx(-0.5, 0.0));
    CHECK_FALSE(l.right_sided());
    CHECK(std::abs(l.ft(0.0) - 1.0 / cplx(-0.5, 0.0)) < 1e-12);
  }

  TEST_CASE("wiener division") {
    auto f = bump_kernel();
    Interval K{-1.0, 1.0};
    auto g = wiener_divide(f, K);
    CHECK(wiener_residual(g, f, K) <= 1e-8);
  }
}
