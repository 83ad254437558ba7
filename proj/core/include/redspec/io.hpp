#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redspec/corpus.hpp"
#include "redspec/kernels.hpp"
#include "redspec/signal.hpp"

namespace redspec {

// CSV with header t,re0,im0[,re1,im1,...] and a strictly uniform t column.
void write_signal_csv(const SampledSignal& f, const std::string& path);
// Parse errors carry the line number. Without an explicit domain a record
// starting at t = 0 is a half-line signal.
SampledSignal read_signal_csv(const std::string& path, std::optional<Domain> domain = std::nullopt,
                              std::optional<std::optional<int>> growth = std::nullopt);

// x.csv -> x.json
std::string sidecar_path(const std::string& csv_path);

// CSV of the full record (two-sided parent when present) plus metadata sidecar.
void write_corpus_signal(const CorpusSignal& c, const std::string& csv_path);
// Uses the sidecar when present; otherwise builds a bare signal named after the file.
CorpusSignal read_corpus_signal(const std::string& csv_path);
// Every *.csv in dir that is not a kernel export, sorted by name.
std::vector<CorpusSignal> read_corpus_dir(const std::string& dir);

// Kernel samples as a signal CSV plus a sidecar {family, ft_support, cut_mass}.
void write_kernel(const TestKernel& k, const std::string& csv_path);
struct KernelFile {
  SampledSignal samples;
  KernelFamily family = KernelFamily::S;
  Interval ft_support = Interval::everything();
  double cut_mass = 0.0;
};
KernelFile read_kernel(const std::string& csv_path);

void write_text(const std::string& path, const std::string& text);

}  // namespace redspec
