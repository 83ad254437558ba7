#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "redspec/kernels.hpp"
#include "redspec/signal.hpp"

namespace redspec {

using ojson = nlohmann::ordered_json;

enum class FunctionClass { Zero, C0, Bounded, UC, Ergodic, ErgodicMeanZero, AP, AAP, SlowlyOscillating };
enum class Tri { Yes, No, Undecided };

const char* to_string(FunctionClass c) noexcept;
const char* to_string(Tri t) noexcept;
std::optional<FunctionClass> parse_class(const std::string& s);

struct ClassTolerances {
  double tol_c0 = 1e-3;
  double tol_erg = 1e-2;
  double tol_bohr = 1e-2;
  double tol_uc = 1e-2;
};

struct ClassReport {
  FunctionClass cls = FunctionClass::Zero;
  Tri member = Tri::Undecided;
  ojson evidence = ojson::object();
  ojson tolerances = ojson::object();
  std::optional<double> witness_t;  // set whenever member == No
  double witness_value = 0.0;
  std::string reason;
  ojson to_json() const;
};

struct BohrCoefficient {
  double omega = 0.0;
  std::vector<cplx> a;
  double norm() const noexcept;
};

struct DetectOptions {
  ClassTolerances tol;
  std::optional<double> scale;     // reference magnitude; default from the signal
  double error_bound = 0.0;        // absolute error already present in the samples
  std::vector<double> candidates;  // AP / AAP frequencies
  std::optional<Interval> bohr_band;  // scan band when no candidates are given
};

// Reference magnitude: sup norm for declared-bounded signals, else the median norm.
double signal_scale(const SampledSignal& f);

// sup |F| over {t in record : |t| >= T} (t >= T on the half-line).
std::vector<double> tail_sup(const SampledSignal& f, const std::vector<double>& checkpoints);
ClassReport is_c0(const SampledSignal& f, const DetectOptions& opts = {});
ClassReport is_zero(const SampledSignal& f, const DetectOptions& opts = {});
ClassReport is_bounded(const SampledSignal& f, const DetectOptions& opts = {});

struct ErgodicResult {
  Mean mean;
  std::vector<double> horizons;
  std::vector<double> deviation;
  double window = 0.0;  // sup over start points in [t0, t0 + window]
  ClassReport report;
};
// Empty T_list selects {H/16, H/8, H/4}; window <= 0 selects H/2.
ErgodicResult ergodic_mean(const SampledSignal& f, std::vector<double> T_list = {}, double window = 0.0,
                           const DetectOptions& opts = {});
ClassReport is_ergodic(const SampledSignal& f, bool mean_zero, const DetectOptions& opts = {});

// Mean of e^{-i w t} F over the second half of the record.
BohrCoefficient bohr_coefficient(const SampledSignal& f, double omega);

struct ApDecomposition {
  std::vector<BohrCoefficient> terms;
  SampledSignal ap_part;
  SampledSignal remainder;
  ClassReport report;  // AAP verdict from is_c0(remainder)
};
ApDecomposition ap_decompose(const SampledSignal& f, const std::vector<double>& candidates,
                             const DetectOptions& opts = {});
// Candidate frequencies from a Bohr-coefficient scan over a band.
std::vector<double> bohr_scan(const SampledSignal& f, Interval band, double threshold, std::size_t max_terms = 8);
ClassReport is_ap(const SampledSignal& f, const DetectOptions& opts = {});

std::vector<double> uc_modulus(const SampledSignal& f, const std::vector<double>& lags);
ClassReport is_uc(const SampledSignal& f, const DetectOptions& opts = {});
ClassReport is_slowly_oscillating(const SampledSignal& f, const DetectOptions& opts = {});

ClassReport detect(const SampledSignal& f, FunctionClass cls, const DetectOptions& opts = {});

}  // namespace redspec
