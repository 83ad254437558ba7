#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "redspec/kernels.hpp"
#include "redspec/signal.hpp"

namespace redspec {

struct ConvolveOptions {
  std::size_t stride = 1;        // output every stride-th lattice point
  std::optional<double> t_lo;    // default: t_min of the extension
  std::optional<double> t_hi;    // default: end of the record
};

// Samples of (H*k) on a full-line grid. A sample is truncated when its
// quadrature window reaches outside the known data; such samples are partial
// sums and are excluded from valid().
struct ConvolvedSignal {
  SampledSignal signal;
  std::vector<std::uint8_t> truncated;
  double error_bound = 0.0;
  Domain origin = Domain::FullLine;

  std::size_t truncated_count() const;
  // Longest run of untruncated samples.
  SampledSignal valid() const;
  // Untruncated samples inside the origin domain (t >= 0 for a half-line).
  SampledSignal restrict_to_origin() const;
};

ConvolvedSignal convolve(const ExtendedSignal& h, const TestKernel& k, const ConvolveOptions& opts = {});
ConvolvedSignal convolve(const ExtendedSignal& h, const BoxKernel& k, const ConvolveOptions& opts = {});

// Convenience: zero-extend (half-line) and restrict back to the origin domain.
SampledSignal convolve_restricted(const SampledSignal& f, const TestKernel& k, std::size_t stride = 1,
                                  double* error_bound = nullptr);

}  // namespace redspec
