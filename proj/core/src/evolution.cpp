#include "redspec/evolution.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>
#include <array>

#include "redspec/error.hpp"

namespace redspec {

namespace {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// h^k phi_k(hA) for k = 0..4 from one exponential of a block upper-triangular matrix.
std::array<Mat, 5> phi_functions(const Mat& A, double h) {
  const Eigen::Index d = A.rows();
  Mat M = Mat::Zero(5 * d, 5 * d);
  M.topLeftCorner(d, d) = h * A;
  for (Eigen::Index k = 0; k < 4; ++k) M.block(k * d, (k + 1) * d, d, d) = Mat::Identity(d, d);
  Mat E = M.exp();
  std::array<Mat, 5> out;
  double hk = 1.0;
  for (Eigen::Index k = 0; k < 5; ++k) {
    out[static_cast<std::size_t>(k)] = E.block(0, k * d, d, d) * hk;
    hk *= h;
  }
  return out;
}

// Weights G_m with int_0^h e^{(h-s)A} p(s) ds = sum_m G_m phi(t_n + o_m h),
// p the cubic through nodes o_m h.
std::array<Mat, 4> forcing_weights(const std::array<Mat, 5>& ph, double h, const std::array<int, 4>& nodes) {
  Eigen::Matrix4d V;
  for (int m = 0; m < 4; ++m)
    for (int k = 0; k < 4; ++k) V(m, k) = std::pow(static_cast<double>(nodes[static_cast<std::size_t>(m)]), k);
  Eigen::Matrix4d Vi = V.inverse();  // coefficients in units of h: c_k h^k = sum_m Vi(k,m) y_m
  // int_0^h e^{(h-s)A} s^k ds = k! h^{k+1} phi_{k+1}(hA) = k! h^{k+1} (ph[k+1] / h^{k+1})
  std::array<Mat, 4> G;
  const double fact[4] = {1, 1, 2, 6};
  for (int m = 0; m < 4; ++m) {
    Mat g = Mat::Zero(ph[0].rows(), ph[0].cols());
    for (int k = 0; k < 4; ++k) g += (Vi(k, m) * fact[k] / std::pow(h, k)) * ph[static_cast<std::size_t>(k + 1)];
    G[static_cast<std::size_t>(m)] = g;
  }
  return G;
}

// Cumulative integral with Simpson pairs and a three-point rule on a trailing odd step.
std::vector<cplx> cumulative(const std::vector<cplx>& f, std::size_t n, std::size_t d, double h) {
  std::vector<cplx> I(n * d, cplx{});
  for (std::size_t c = 0; c < d; ++c) {
    auto y = [&](std::size_t i) { return f[i * d + c]; };
    for (std::size_t i = 1; i < n; ++i) {
      if (i % 2 == 0) {
        I[i * d + c] = I[(i - 2) * d + c] + h / 3.0 * (y(i - 2) + 4.0 * y(i - 1) + y(i));
      } else if (i >= 2) {
        I[i * d + c] = I[(i - 1) * d + c] + h / 12.0 * (-y(i - 2) + 8.0 * y(i - 1) + 5.0 * y(i));
      } else if (n > 2) {
        I[i * d + c] = h / 12.0 * (5.0 * y(0) + 8.0 * y(1) - y(2));
      } else {
        I[i * d + c] = 0.5 * h * (y(0) + y(1));
      }
    }
  }
  return I;
}

}  // namespace

EvolutionSolution solve_evolution(const EvolutionProblem& p) {
  const SampledSignal& phi = p.phi;
  const std::size_t d = phi.dim();
  if (p.A.rows() != static_cast<Eigen::Index>(d) || p.A.cols() != static_cast<Eigen::Index>(d) ||
      p.u0.size() != static_cast<Eigen::Index>(d))
    fail(ErrorKind::GridMismatch, "matrix, initial value and forcing dimensions differ");
  if (phi.domain() != Domain::HalfLine) fail(ErrorKind::Domain, "forcing must live on the half-line");
  const std::size_t n = phi.size();
  if (n < 4) fail(ErrorKind::Horizon, "forcing record needs at least four samples");
  const double h = phi.dt();
  auto ph = phi_functions(p.A, h);
  const Mat& E = ph[0];
  auto G_start = forcing_weights(ph, h, {0, 1, 2, 3});
  auto G_mid = forcing_weights(ph, h, {-1, 0, 1, 2});
  auto G_end = forcing_weights(ph, h, {-2, -1, 0, 1});

  std::vector<cplx> out(n * d);
  Vec u = p.u0;
  auto fvec = [&](std::size_t i) { return Eigen::Map<const Vec>(phi.row(i), static_cast<Eigen::Index>(d)); };
  for (std::size_t c = 0; c < d; ++c) out[c] = u(static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vec next = E * u;
    if (i == 0) {
      for (int m = 0; m < 4; ++m) next += G_start[static_cast<std::size_t>(m)] * fvec(i + static_cast<std::size_t>(m));
    } else if (i + 2 < n) {
      for (int m = 0; m < 4; ++m) next += G_mid[static_cast<std::size_t>(m)] * fvec(i - 1 + static_cast<std::size_t>(m));
    } else {
      for (int m = 0; m < 4; ++m) next += G_end[static_cast<std::size_t>(m)] * fvec(i - 2 + static_cast<std::size_t>(m));
    }
    u = next;
    for (std::size_t c = 0; c < d; ++c) out[(i + 1) * d + c] = u(static_cast<Eigen::Index>(c));
  }
  EvolutionSolution s;
  s.u = SampledSignal(Domain::HalfLine, 0.0, h, d, std::move(out), 0, false);
  s.sup_norm = s.u.sup_norm();
  s.residual = evolution_residual(p, s.u);
  return s;
}

double evolution_residual(const EvolutionProblem& p, const SampledSignal& u) {
  const std::size_t n = u.size(), d = u.dim();
  if (p.phi.size() != n || p.phi.dim() != d) fail(ErrorKind::GridMismatch, "solution and forcing grids differ");
  const double h = u.dt();
  auto Iu = cumulative(u.to_vector(), n, d, h);
  auto If = cumulative(p.phi.to_vector(), n, d, h);
  double worst = 0.0;
  Vec r(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::Map<const Vec> ui(u.row(i), static_cast<Eigen::Index>(d));
    Eigen::Map<const Vec> iu(&Iu[i * d], static_cast<Eigen::Index>(d));
    Eigen::Map<const Vec> iff(&If[i * d], static_cast<Eigen::Index>(d));
    r = ui - p.u0 - p.A * iu - iff;
    worst = std::max(worst, r.norm());
  }
  return worst;
}

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& A) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A, false);
  if (es.info() != Eigen::Success) fail(ErrorKind::Domain, "eigenvalue iteration did not converge");
  std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return v;
}

}  // namespace redspec
