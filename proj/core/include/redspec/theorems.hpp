#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redspec/corpus.hpp"
#include "redspec/evolution.hpp"
#include "redspec/spectra.hpp"

namespace redspec {

enum class CheckStatus { Pass, Fail, Vacuous };
const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string id;
  std::string subject;
  CheckStatus status = CheckStatus::Vacuous;
  std::string reason;
  ojson details = ojson::object();
  ojson to_json() const;
};

struct SuiteOptions {
  FrequencyGrid grid;
  SpectrumOptions spectra;
  std::uint64_t seed = 20240611;
  std::size_t evolution_instances = 20;
  double evolution_tmax = 600.0;
  double evolution_dt = 0.005;
  double evolution_out_dt = 0.05;
  double tol_transform = 1e-4;  // relative to the median transform magnitude
  double tol_ode = 1e-5;       // relative to 1 + sup |u|
  double tol_conv = 1e-6;
  double tol_wiener = 1e-8;
  double eps_div = 1e-6;       // Wiener division safety floor
  double pole_radius = 0.6;    // accepted distance from a singular point to i sigma(A)
};

// Spectra keyed by subject and kind, shared between checks.
class SpectrumCache {
 public:
  const SpectrumEstimate& get(const std::string& key, const std::function<SpectrumEstimate()>& make);
  std::size_t size() const noexcept { return map_.size(); }

 private:
  std::map<std::string, SpectrumEstimate> map_;
};

std::vector<std::string> check_ids();
bool is_check_id(const std::string& id);

// Per-signal checks.
CheckResult check_inclusion_chain(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache);
CheckResult check_ergodic_theorem(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache);
CheckResult check_tauberian(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache);
// Only for signals with a closed-form transform; nullopt otherwise.
std::optional<CheckResult> check_regular_ft(const CorpusSignal& c, const SuiteOptions& o);
std::vector<CheckResult> check_expectations(const CorpusSignal& c, const SuiteOptions& o, SpectrumCache& cache);

// Operator properties of the reduced C0 spectrum.
CheckResult check_modulation_shift(const CorpusSignal& c, double lambda, const SuiteOptions& o, SpectrumCache& cache);
CheckResult check_translation_invariance(const CorpusSignal& c, double s, const SuiteOptions& o,
                                         SpectrumCache& cache);
CheckResult check_convolution_shrinking(const CorpusSignal& c, const TestKernel& g, const SuiteOptions& o,
                                        SpectrumCache& cache);
CheckResult check_mollifier_union(const CorpusSignal& c, const std::vector<double>& hs, const SuiteOptions& o,
                                  SpectrumCache& cache);
CheckResult check_subadditivity(const CorpusSignal& a, const CorpusSignal& b, const SuiteOptions& o,
                                SpectrumCache& cache);

// Evolution equations u' = A u + phi.
struct EvolutionInstance {
  std::string name;
  EvolutionProblem problem;
};
std::vector<EvolutionInstance> closed_form_evolution_instances(double tmax, double dt);
// Bounded instances with d <= 4: eigenvalues on iR or with Re in [-2, -0.5],
// forcing by finite exponential sums away from the imaginary eigenvalues.
std::vector<EvolutionInstance> random_evolution_instances(std::uint64_t seed, std::size_t count, double tmax,
                                                          double dt);
CheckResult check_evolution(const EvolutionInstance& inst, const SuiteOptions& o);

// Global checks.
CheckResult check_transform_identities(const CorpusSignal& c, const SuiteOptions& o, std::size_t count = 20);
CheckResult check_wiener_division(const std::string& subject, const TestKernel& f, Interval K,
                                  const SuiteOptions& o);
CheckResult check_approximate_identity(const SuiteOptions& o);
CheckResult check_kernel_consistency(const TestKernel& k, const SuiteOptions& o);
CheckResult check_annihilator(const SuiteOptions& o);
CheckResult check_pole_localization(const SuiteOptions& o, SpectrumCache& cache);
CheckResult check_mollified_chirp(double h, const SuiteOptions& o);
CheckResult check_ergodic_mean(const SuiteOptions& o);
CheckResult check_ap_coefficient(const SuiteOptions& o);

// int e^{-s} rho(s) ds for the mass-one bump rho.
double bump_exp_moment();

// Runs every check (or one id) over the corpus and the built-in instances.
std::vector<CheckResult> run_suite(const std::vector<CorpusSignal>& corpus, const SuiteOptions& o,
                                   const std::optional<std::string>& only = std::nullopt);
bool any_failed(const std::vector<CheckResult>& results);
ojson to_json(const std::vector<CheckResult>& results);

}  // namespace redspec
