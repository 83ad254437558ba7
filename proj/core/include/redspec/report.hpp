#pragma once

#include <string>

#include "redspec/spectra.hpp"

namespace redspec {

// Floats rounded to 12 significant digits, non-finite values as null,
// insertion-ordered keys, two-space indent, trailing newline.
ojson round_floats(const ojson& j);
std::string dump_report(const ojson& j);

// Plot data: header omega,status_code,metric then one row per grid point.
std::string plot_csv(const SpectrumEstimate& s);

}  // namespace redspec
