#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace redspec {

using cplx = std::complex<double>;

enum class Domain { HalfLine, FullLine };

const char* to_string(Domain d) noexcept;

// Relative tolerance used when snapping times onto a sampling lattice.
inline constexpr double kLatticeTol = 1e-9;

// Uniformly sampled F: J -> C^d. Values are row-major (sample, component) and
// shared between copies, so slicing and passing by value are cheap.
class SampledSignal {
 public:
  SampledSignal() = default;

  // growth: declared exponent k with |F(t)| <= C (1+t^2)^k; nullopt means only
  // locally integrable (no polynomial bound is claimed).
  SampledSignal(Domain domain, double t0, double dt, std::size_t dim, std::vector<cplx> values,
                std::optional<int> growth = 0, bool validate_growth = true);

  template <class Fn>
  static SampledSignal generate(Domain domain, double t0, double dt, std::size_t n, std::size_t dim,
                                Fn&& fn, std::optional<int> growth = 0,
                                bool validate_growth = true) {
    std::vector<cplx> v(n * dim);
    for (std::size_t i = 0; i < n; ++i) fn(t0 + static_cast<double>(i) * dt, v.data() + i * dim);
    return SampledSignal(domain, t0, dt, dim, std::move(v), growth, validate_growth);
  }

  Domain domain() const noexcept { return domain_; }
  double t0() const noexcept { return t0_; }
  double dt() const noexcept { return dt_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t dim() const noexcept { return dim_; }
  double t_end() const noexcept { return t0_ + static_cast<double>(n_ - 1) * dt_; }
  double time(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * dt_; }
  std::optional<int> growth_exponent() const noexcept { return growth_; }
  bool empty() const noexcept { return n_ == 0; }

  const cplx* row(std::size_t i) const noexcept { return data_->data() + offset_ + i * dim_; }
  cplx at(std::size_t i, std::size_t c = 0) const noexcept { return row(i)[c]; }
  double norm_at(std::size_t i) const noexcept;
  double sup_norm() const noexcept;
  double sup_norm(std::size_t i0, std::size_t i1) const noexcept;  // [i0, i1)
  std::vector<cplx> to_vector() const;

  // Index of t on this grid, or nullopt if t is not a lattice point in range.
  std::optional<std::size_t> index_of(double t) const noexcept;
  // Number of dt steps in s, throwing a grid-mismatch error when s is off-lattice.
  long steps(double s) const;

  SampledSignal slice(std::size_t i0, std::size_t count) const;
  SampledSignal decimate(std::size_t stride) const;
  SampledSignal with_values(std::vector<cplx> values) const;
  SampledSignal with_growth(std::optional<int> growth) const;
  SampledSignal component(std::size_t c) const;

 private:
  Domain domain_ = Domain::FullLine;
  double t0_ = 0.0;
  double dt_ = 1.0;
  std::size_t n_ = 0;
  std::size_t dim_ = 1;
  std::optional<int> growth_;
  std::shared_ptr<const std::vector<cplx>> data_;
  std::size_t offset_ = 0;
};

// Least-squares slope of log max|F| over dyadic |t| blocks against log(1+t^2).
std::optional<double> fitted_growth_slope(const SampledSignal& f);
void validate_growth(const SampledSignal& f, int k);

struct Mean {
  std::vector<cplx> value;
  double norm() const noexcept;
};

// Zero extension of a half-line signal to R; a full-line signal passes through.
// Rows left of the record are exactly zero when the origin is the half-line.
class ExtendedSignal {
 public:
  ExtendedSignal() = default;
  ExtendedSignal(SampledSignal base, double t_min);

  const SampledSignal& base() const noexcept { return base_; }
  Domain origin_domain() const noexcept { return base_.domain(); }
  Domain domain() const noexcept { return Domain::FullLine; }
  double dt() const noexcept { return base_.dt(); }
  std::size_t dim() const noexcept { return base_.dim(); }
  double t_min() const noexcept { return t_min_; }
  double t_end() const noexcept { return base_.t_end(); }
  std::optional<int> growth_exponent() const noexcept { return base_.growth_exponent(); }

  // Base-relative index i (may be negative). Returns nullptr when unknown.
  const cplx* row(long i) const noexcept;
  bool known(long i) const noexcept;
  long first_known() const noexcept;  // LONG_MIN for a zero-extended half-line
  long last_known() const noexcept { return static_cast<long>(base_.size()) - 1; }

  // Samples on [t_min, t_end].
  SampledSignal materialize() const;

 private:
  SampledSignal base_;
  double t_min_ = 0.0;
  std::vector<cplx> zero_;
};

ExtendedSignal extend_by_zero(const SampledSignal& f, double t_min);

SampledSignal translate(const SampledSignal& f, double s);
SampledSignal modulate(const SampledSignal& f, double omega);
SampledSignal reflect(const SampledSignal& f);
SampledSignal difference(const SampledSignal& f, double s);

// M_h F(t) = (1/h) int_0^h F(t+s) ds for t in [t0, t_end - h], via the
// trapezoid indefinite integral.
SampledSignal mollify(const SampledSignal& f, double h);
// PF(t) = int_{t0}^t F(s) ds, cumulative trapezoid.
SampledSignal indefinite_integral(const SampledSignal& f);

SampledSignal add(const SampledSignal& a, const SampledSignal& b, cplx scale_b = 1.0);
SampledSignal scale(const SampledSignal& a, cplx c);

}  // namespace redspec
