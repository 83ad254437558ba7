#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "redspec/classes.hpp"
#include "redspec/convolution.hpp"
#include "redspec/kernels.hpp"
#include "redspec/signal.hpp"

namespace redspec {

struct FrequencyGrid {
  double min = -5.0;
  double max = 5.0;
  double step = 0.1;
  FrequencyGrid() = default;
  FrequencyGrid(double lo, double hi, double st);
  std::size_t size() const noexcept;
  double at(std::size_t j) const noexcept { return min + static_cast<double>(j) * step; }
  std::vector<double> points() const;
};

enum class Status { Regular, Singular, Undecided };
const char* to_string(Status s) noexcept;
int status_code(Status s) noexcept;  // 0 regular, 1 singular, 2 undecided

enum class SpectrumKind { Reduced, Beurling, Carleman, Laplace, WeakLaplace };
const char* to_string(SpectrumKind k) noexcept;
std::optional<SpectrumKind> parse_kind(const std::string& s);
std::optional<KernelFamily> parse_family(const std::string& s);

struct RegularityCertificate {
  double omega = 0.0;
  Status status = Status::Undecided;
  std::string kernel_id;   // kernel that certified regularity
  double delta = 0.0;      // bandwidth of that kernel, 0 if not a band-pass
  double metric = 0.0;     // scalar summary for plotting
  ojson evidence = ojson::object();
  std::string reason;
  ojson to_json() const;
};

struct SpectrumEstimate {
  SpectrumKind kind = SpectrumKind::Reduced;
  std::optional<FunctionClass> cls;
  std::optional<KernelFamily> family;
  FrequencyGrid grid;
  std::vector<RegularityCertificate> certificates;

  std::vector<double> singular_set() const;
  Status status_at(double omega) const;  // nearest grid point
  std::size_t count(Status s) const;
  std::string label() const;
  ojson to_json() const;
};

// Factory for registered kernels (e.g. annihilators); receives omega and dt.
using KernelFactory = std::function<TestKernel(double omega, double dt)>;

struct SpectrumOptions {
  ClassTolerances tol;
  std::vector<double> delta_seq{1.0, 0.5, 0.25};
  std::vector<double> a_seq{0.4, 0.2, 0.1, 0.05, 0.025};
  std::vector<double> eps_seq{0.25, 0.5};
  double blowup_thresh = 10.0;
  double tol_match = 1e-3;
  double tol_analytic = 1e-3;
  double tol_tail = 1e-6;
  double bandpass_width = 50.0;  // kernel half-width is bandpass_width / delta
  double output_step = 0.25;     // time spacing of convolved outputs
  double window = 0.25;          // frequency window for half-plane statistics
  int disk_nodes = 64;
  double disk_radius = 0.9;
  std::vector<KernelFactory> extra_kernels;
  bool use_ladder = true;
};

// ----- transforms -----

enum class Side { Right, Left, Both };

struct TransformValue {
  std::vector<cplx> value;
  double tail_bound = 0.0;  // bound on the discarded part beyond the record
};

// L F(lambda) = int_0^inf e^{-lambda t} F(t) dt for a half-line signal (Re lambda > 0).
TransformValue laplace_transform(const SampledSignal& f, cplx lambda);
// Carleman transform of a full-line signal: L+ on Re > 0, L- on Re < 0.
TransformValue carleman_transform(const SampledSignal& f, cplx lambda);

// L F(a + i(s0 + j ds)) for j < m via a chirp-z transform; result[j][component].
std::vector<std::vector<cplx>> laplace_line(const SampledSignal& f, double a, double s0, double ds, std::size_t m);

struct HalfPlaneGrid {
  std::vector<double> a_seq;
  std::vector<double> omegas;
  Side side = Side::Right;
  // values[side][k][j] with side 0 = right, 1 = left.
  std::vector<std::vector<std::vector<std::vector<cplx>>>> values;
  std::vector<double> tail_bound;  // per a, worst side
  std::size_t dim = 1;
};

// Side Right works on any signal (the part on t >= 0); Left and Both need a
// full-line signal. Values on the left are L- at -a + i w.
HalfPlaneGrid half_plane_scan(const SampledSignal& f, const std::vector<double>& omegas,
                              const std::vector<double>& a_seq, Side side);

// ||L F_s(l) - e^{ls} L F(l) + e^{ls} int_0^s e^{-lt} F||.
double shift_identity_residual(const SampledSignal& f, double s, cplx lambda);
// ||L M_h F(l) - g(lh) L F(l) + correction||, g(z) = (e^z - 1)/z.
double mollifier_identity_residual(const SampledSignal& f, double h, cplx lambda);

// ----- engines -----

RegularityCertificate test_regular(const SampledSignal& f, double omega, FunctionClass cls, KernelFamily family,
                                   const SpectrumOptions& opts = {});
SpectrumEstimate reduced_spectrum(const SampledSignal& f, FunctionClass cls, KernelFamily family,
                                  const FrequencyGrid& grid, const SpectrumOptions& opts = {});
SpectrumEstimate beurling_spectrum(const SampledSignal& f, const FrequencyGrid& grid,
                                   const SpectrumOptions& opts = {});
SpectrumEstimate carleman_spectrum(const SampledSignal& f, const FrequencyGrid& grid,
                                   const SpectrumOptions& opts = {});
SpectrumEstimate laplace_spectrum(const SampledSignal& f, const FrequencyGrid& grid,
                                  const SpectrumOptions& opts = {});
SpectrumEstimate weak_laplace_spectrum(const SampledSignal& f, const FrequencyGrid& grid,
                                       const SpectrumOptions& opts = {});

// Agreement between the reduced spectra of a half-line F and of an extension H.
struct SpectrumComparison {
  std::size_t agree = 0;
  std::size_t disagree = 0;   // Regular vs Singular
  std::size_t undecided = 0;
};
SpectrumComparison compare_spectra(const SpectrumEstimate& a, const SpectrumEstimate& b);

}  // namespace redspec
