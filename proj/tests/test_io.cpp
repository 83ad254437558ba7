#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "redspec/error.hpp"
#include "redspec/io.hpp"

using namespace redspec;
namespace fs = std::filesystem;

namespace {
fs::path scratch(const std::string& name) {
  auto d = fs::temp_directory_path() / "redspec_io_test";
  fs::create_directories(d);
  return d / name;
}
void put(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }
bool throws_parse_at(const fs::path& p, const std::string& where) {
  try {
    read_signal_csv(p.string());
  } catch (const Error& e) {
    return e.kind() == ErrorKind::Parse && std::string(e.what()).find(where) != std::string::npos;
  }
  return false;
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("signal round trip is exact") {
    auto f = SampledSignal::generate(Domain::FullLine, -1.0, 0.1, 21, 2, [](double t, cplx* v) {
      v[0] = std::polar(1.0, 0.3 * t);
      v[1] = {t / 3.0, 1e-300};
    });
    auto p = scratch("rt.csv");
    write_signal_csv(f, p.string());
    auto g = read_signal_csv(p.string(), Domain::FullLine, std::optional<int>(0));
    REQUIRE(g.size() == f.size());
    REQUIRE(g.dim() == 2);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t c = 0; c < 2; ++c) CHECK(g.at(i, c) == f.at(i, c));
  }

  TEST_CASE("domain inference") {
    auto p = scratch("h.csv");
    put(p, "t,re0,im0\n0,1,0\n0.5,1,0\n1,1,0\n");
    CHECK(read_signal_csv(p.string()).domain() == Domain::HalfLine);
    put(p, "t,re0,im0\n-0.5,1,0\n0,1,0\n0.5,1,0\n");
    CHECK(read_signal_csv(p.string()).domain() == Domain::FullLine);
  }

  TEST_CASE("malformed input reports the line") {
    auto p = scratch("bad.csv");
    put(p, "time,re0,im0\n0,1,0\n");
    CHECK(throws_parse_at(p, ":1:"));
    put(p, "t,re0,im0\n0,1,0\n0.1,1\n");
    CHECK(throws_parse_at(p, ":3:"));
    put(p, "t,re0,im0\n0,1,0\n0.1,x,0\n");
    CHECK(throws_parse_at(p, ":3:"));
    put(p, "t,re0,im0\n0,1,0\n0.1,1,0\n0.2000001,1,0\n0.3,1,0\n");
    CHECK(throws_parse_at(p, ":4:"));
    CHECK_THROWS_AS(read_signal_csv(scratch("missing.csv").string()), Error);
  }

  TEST_CASE("tiny jitter is accepted") {
    auto p = scratch("jit.csv");
    put(p, "t,re0,im0\n0,1,0\n0.1,1,0\n0.20000000000001,1,0\n0.3,1,0\n");
    CHECK(read_signal_csv(p.string()).size() == 4);
  }

  TEST_CASE("corpus signal round trip keeps metadata") {
    auto c = make_corpus_signal("expgrow");
    auto p = scratch("expgrow.csv");
    write_corpus_signal(c, p.string());
    CHECK(fs::exists(sidecar_path(p.string())));
    auto r = read_corpus_signal(p.string());
    CHECK(r.name == "expgrow");
    CHECK(r.expectations.size() == c.expectations.size());
    CHECK(r.kernels.size() == 1);
    CHECK(r.signal.size() == c.signal.size());
    CHECK(r.signal.growth_exponent() == c.signal.growth_exponent());
  }

  TEST_CASE("two-sided records") {
    auto c = make_corpus_signal("exp_iw1", ojson{{"tmax", 20.0}});
    REQUIRE(c.two_sided.has_value());
    auto p = scratch("two.csv");
    write_corpus_signal(c, p.string());
    auto r = read_corpus_signal(p.string());
    REQUIRE(r.two_sided.has_value());
    CHECK(r.two_sided->t0() == doctest::Approx(c.two_sided->t0()));
    CHECK(r.signal.t0() == doctest::Approx(c.signal.t0()));
  }

  TEST_CASE("kernel export") {
    auto k = bandpass_kernel(1.0, 0.5);
    auto p = scratch("k.csv");
    write_kernel(k, p.string());
    auto r = read_kernel(p.string());
    CHECK(r.family == KernelFamily::S);
    CHECK(r.ft_support.lo == doctest::Approx(0.0));
    CHECK(r.ft_support.hi == doctest::Approx(2.0));
    CHECK(r.samples.size() == k.samples().size());
    auto d = scratch("dir");
    fs::create_directories(d);
    write_kernel(k, (d / "k.csv").string());
    write_corpus_signal(make_corpus_signal("zero", ojson{{"tmax", 5.0}}), (d / "zero.csv").string());
    auto all = read_corpus_dir(d.string());
    REQUIRE(all.size() == 1);
    CHECK(all[0].name == "zero");
  }
}
