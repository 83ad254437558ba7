#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redspec/classes.hpp"
#include "redspec/signal.hpp"
#include "redspec/spectra.hpp"

namespace redspec {

struct Expectation {
  std::string property;    // e.g. "class:c0", "laplace-singular"
  std::string value;
  std::string provenance;  // "paper", "derived" or "trivial"
};

struct CorpusSignal {
  std::string name;
  ojson params = ojson::object();
  SampledSignal signal;
  std::optional<SampledSignal> two_sided;  // full-line parent used for the Carleman transform
  std::vector<Expectation> expectations;
  std::vector<KernelFactory> kernels;      // registered annihilating kernels
  std::vector<std::string> kernel_names;   // registry names of the entries in kernels
  std::optional<KernelFamily> family;      // family for the reduced spectrum, default S

  // Part on t >= 0 as a half-line signal.
  SampledSignal half_line() const;
  // Full-line signal for the Carleman transform (zero extension if none).
  SampledSignal carleman_input() const;
  ojson metadata() const;
};

// Registered kernel factories by name ("annihilator").
KernelFactory kernel_factory(const std::string& name);

std::vector<std::string> corpus_names();
bool is_corpus_name(const std::string& name);
// Params may override "tmax", "dt" and "omega0".
CorpusSignal make_corpus_signal(const std::string& name, const ojson& params = ojson::object());
std::vector<CorpusSignal> builtin_corpus();

SampledSignal restrict_half_line(const SampledSignal& f);

// int_x^inf e^{i s^2} ds.
cplx chirp_tail(double x);
// (1/h) int_t^{t+h} e^{i s^2} ds on [0, tmax], evaluated without sampling the chirp.
SampledSignal mollified_chirp(double h, double tmax, double dt);

}  // namespace redspec
