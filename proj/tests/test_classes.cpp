#include <doctest.h>

#include <cmath>
#include <numbers>

#include "redspec/classes.hpp"

using namespace redspec;

namespace {
template <class Fn>
SampledSignal half(double T, double dt, Fn fn, std::optional<int> growth = 0) {
  auto n = static_cast<std::size_t>(std::llround(T / dt)) + 1;
  return SampledSignal::generate(Domain::HalfLine, 0.0, dt, n, 1, [&](double t, cplx* v) { v[0] = fn(t); }, growth);
}
}  // namespace

TEST_SUITE("classes") {
  TEST_CASE("c0") {
    auto d = half(1000, 0.05, [](double t) { return cplx(std::exp(-t)); });
    auto r = is_c0(d);
    CHECK(r.member == Tri::Yes);
    auto c = half(1000, 0.05, [](double t) { return std::polar(1.0, t); });
    auto n = is_c0(c);
    CHECK(n.member == Tri::No);
    CHECK(n.witness_t.has_value());
  }

  TEST_CASE("tail sup") {
    auto d = half(100, 0.01, [](double t) { return cplx(1.0 / (1.0 + t)); });
    auto s = tail_sup(d, {0.0, 9.0, 99.0});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == doctest::Approx(1.0));
    CHECK(s[1] == doctest::Approx(0.1).epsilon(1e-6));
    CHECK(s[2] == doctest::Approx(0.01).epsilon(1e-6));
  }

  TEST_CASE("zero and bounded") {
    auto z = half(100, 0.05, [](double) { return cplx(0.0); });
    CHECK(is_zero(z).member == Tri::Yes);
    auto c = half(100, 0.05, [](double t) { return std::polar(2.0, t); });
    CHECK(is_zero(c).member == Tri::No);
    CHECK(is_bounded(c).member == Tri::Yes);
  }

  TEST_CASE("ergodic means") {
    auto c = half(1000, 0.05, [](double t) { return std::polar(1.0, t); });
    auto e = ergodic_mean(c);
    CHECK(e.mean.norm() < 1e-2);
    CHECK(is_ergodic(c, true).member == Tri::Yes);
    auto k = half(1000, 0.05, [](double t) { return cplx(3.0 + std::cos(t)); });
    auto m = ergodic_mean(k);
    CHECK(std::abs(m.mean.value[0] - 3.0) < 1e-2);
    CHECK(is_ergodic(k, true).member == Tri::No);
  }

  TEST_CASE("bohr coefficient and AP decomposition") {
    const double r2 = std::numbers::sqrt2;
    auto f = half(1000, 0.05, [r2](double t) { return std::polar(1.0, t) + 0.5 * std::polar(1.0, r2 * t); });
    auto b = bohr_coefficient(f, 1.0);
    CHECK(std::abs(b.a[0] - 1.0) < 1e-2);
    auto peaks = bohr_scan(f, {-3.0, 3.0}, 0.1);
    REQUIRE(peaks.size() >= 2);
    bool has1 = false, hasr2 = false;
    for (double p : peaks) {
      has1 |= std::abs(p - 1.0) < 1e-3;
      hasr2 |= std::abs(p - r2) < 1e-3;
    }
    CHECK(has1);
    CHECK(hasr2);
    CHECK(is_ap(f).member == Tri::Yes);
    auto d = ap_decompose(f, {1.0, r2});
    CHECK(d.report.member == Tri::Yes);
    CHECK(d.remainder.sup_norm() < 2e-2);
  }

  TEST_CASE("uniform continuity") {
    auto c = half(500, 0.01, [](double t) { return std::polar(1.0, t); });
    auto m = uc_modulus(c, {0.01, 0.1});
    REQUIRE(m.size() == 2);
    CHECK(m[0] == doctest::Approx(0.01).epsilon(1e-2));
    CHECK(is_uc(c).member == Tri::Yes);
    auto ch = half(200, 0.005, [](double t) { return std::polar(1.0, t * t); });
    CHECK(is_uc(ch).member == Tri::No);
  }

  TEST_CASE("slowly oscillating") {
    auto s = half(1000, 0.05, [](double t) { return std::polar(1.0, std::log(1.0 + t)); });
    CHECK(is_slowly_oscillating(s).member != Tri::No);
    auto c = half(1000, 0.05, [](double t) { return std::polar(1.0, t); });
    CHECK(is_slowly_oscillating(c).member == Tri::Yes);
    auto g = half(12, 0.002, [](double t) { return cplx(std::exp(t)); }, std::nullopt);
    CHECK(is_slowly_oscillating(g).member == Tri::No);
  }

  TEST_CASE("report shape") {
    auto c = half(100, 0.05, [](double t) { return std::polar(1.0, t); });
    auto j = detect(c, FunctionClass::Bounded).to_json();
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    REQUIRE(keys.size() >= 4);
    CHECK(keys[0] == "class");
    CHECK(keys[1] == "member");
    CHECK(keys[2] == "evidence");
    CHECK(keys[3] == "tolerances");
    CHECK(parse_class("c0") == FunctionClass::C0);
    CHECK_FALSE(parse_class("nonsense").has_value());
  }
}
