#pragma once

#include <cstddef>
#include <vector>

#include "redspec/signal.hpp"

namespace redspec::detail {

// y[n] = sum_m k[m] x[n - m], length x.size() + nk - 1.
std::vector<cplx> fft_linear(const std::vector<cplx>& x, const cplx* k, std::size_t nk);
// X_j = sum_k x_k e^{-i (s0 + j ds) k dt}, j < m (Bluestein).
std::vector<cplx> chirp_z(const std::vector<cplx>& x, double dt, double s0, double ds, std::size_t m);

}  // namespace redspec::detail
