#include <doctest.h>

#include "oracles.hpp"
#include "redspec/error.hpp"
#include "redspec/theorems.hpp"

using namespace redspec;

TEST_SUITE("theorems") {
  TEST_CASE("check ids") {
    auto ids = check_ids();
    CHECK(ids.size() == 20);
    CHECK(is_check_id("inclusion-chain"));
    CHECK_FALSE(is_check_id("bogus"));
    CHECK_THROWS_AS(run_suite({}, SuiteOptions{}, std::string("bogus")), Error);
  }

  TEST_CASE("result json key order") {
    CheckResult r{"wiener-division", "x", CheckStatus::Fail, "because", ojson{{"a", 1}}};
    auto j = r.to_json();
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"id", "subject", "status", "reason", "details"});
    CHECK(j["status"] == "fail");
    CHECK(any_failed({r}));
  }

  TEST_CASE("bump exponential moment") {
    CHECK(bump_exp_moment() == doctest::Approx(oracle::bump_exp_moment()).epsilon(1e-8));
  }

  TEST_CASE("fast global checks pass") {
    SuiteOptions o;
    CHECK(check_wiener_division("bump", bump_kernel(), {-1.0, 1.0}, o).status == CheckStatus::Pass);
    CHECK(check_kernel_consistency(bandpass_kernel(0.0, 0.5), o).status == CheckStatus::Pass);
    CHECK(check_annihilator(o).status == CheckStatus::Pass);
    CHECK(check_ap_coefficient(o).status == CheckStatus::Pass);
  }

  TEST_CASE("random evolution instances are reproducible") {
    auto a = random_evolution_instances(7, 3, 50.0, 0.01);
    auto b = random_evolution_instances(7, 3, 50.0, 0.01);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(a[i].problem.A.isApprox(b[i].problem.A));
      CHECK(a[i].problem.A.rows() <= 4);
    }
  }

  TEST_CASE("closed-form evolution instance") {
    SuiteOptions o;
    o.evolution_tmax = 200.0;
    auto inst = closed_form_evolution_instances(o.evolution_tmax, o.evolution_dt);
    REQUIRE_FALSE(inst.empty());
    CHECK(check_evolution(inst.front(), o).status == CheckStatus::Pass);
  }

  TEST_CASE("run_suite restricted to one id") {
    SuiteOptions o;
    o.grid = FrequencyGrid(-2.0, 2.0, 0.5);
    std::vector<CorpusSignal> corpus{make_corpus_signal("exp_iw1"), make_corpus_signal("decay_exp")};
    auto r = run_suite(corpus, o, std::string("inclusion-chain"));
    REQUIRE(r.size() == 2);
    for (auto& x : r) CHECK(x.id == "inclusion-chain");
    CHECK_FALSE(any_failed(r));
    CHECK(to_json(r).size() == 2);
  }
}
