#include <doctest.h>

#include <cmath>

#include "redspec/corpus.hpp"
#include "redspec/spectra.hpp"

using namespace redspec;

TEST_SUITE("spectra") {
  TEST_CASE("frequency grid") {
    FrequencyGrid g(-1.0, 1.0, 0.5);
    CHECK(g.size() == 5);
    CHECK(g.at(4) == doctest::Approx(1.0));
    CHECK(parse_kind("weak-laplace") == SpectrumKind::WeakLaplace);
    CHECK(parse_kind("wl") == SpectrumKind::WeakLaplace);
    CHECK_FALSE(parse_kind("bogus").has_value());
    CHECK(parse_family("L1") == KernelFamily::L1);
    CHECK(status_code(Status::Regular) == 0);
    CHECK(status_code(Status::Singular) == 1);
    CHECK(status_code(Status::Undecided) == 2);
  }

  TEST_CASE("single frequency locates in all spectra") {
    auto c = make_corpus_signal("exp_iw1");
    FrequencyGrid g(-1.0, 3.0, 0.5);
    auto h = c.half_line();
    for (const auto& s : {reduced_spectrum(h, FunctionClass::C0, KernelFamily::S, g),
                          laplace_spectrum(h, g), weak_laplace_spectrum(h, g),
                          carleman_spectrum(c.carleman_input(), g), beurling_spectrum(c.two_sided.value_or(c.signal), g)}) {
      INFO(s.label());
      CHECK(s.status_at(1.0) == Status::Singular);
      CHECK(s.status_at(-1.0) == Status::Regular);
      CHECK(s.status_at(3.0) == Status::Regular);
    }
  }

  TEST_CASE("zero signal has empty spectra") {
    auto c = make_corpus_signal("zero");
    FrequencyGrid g(-2.0, 2.0, 1.0);
    auto b = beurling_spectrum(c.signal, g);
    CHECK(b.count(Status::Regular) == g.size());
    auto r = reduced_spectrum(c.half_line(), FunctionClass::C0, KernelFamily::D, g);
    CHECK(r.singular_set().empty());
  }

  TEST_CASE("test_regular certificate") {
    auto c = make_corpus_signal("decay_exp");
    auto cert = test_regular(c.half_line(), 0.5, FunctionClass::C0, KernelFamily::S);
    CHECK(cert.status == Status::Regular);
    CHECK_FALSE(cert.kernel_id.empty());
    auto j = cert.to_json();
    CHECK(j["status"] == "regular");
  }

  TEST_CASE("estimate json") {
    auto c = make_corpus_signal("exp_iw0");
    FrequencyGrid g(-1.0, 1.0, 1.0);
    auto s = laplace_spectrum(c.half_line(), g);
    auto j = s.to_json();
    CHECK(j["kind"] == "laplace");
    CHECK(j["status"].size() == 3);
    CHECK(j["evidence"].size() == 3);
    auto cmp = compare_spectra(s, s);
    CHECK(cmp.disagree == 0);
  }
}
