#pragma once

#include <Eigen/Dense>
#include <vector>

#include "redspec/signal.hpp"

namespace redspec {

// du/dt = A u + phi(t) on the half-line, u(0) = u0.
struct EvolutionProblem {
  Eigen::MatrixXcd A;
  SampledSignal phi;  // half-line forcing; its grid is the solution grid
  Eigen::VectorXcd u0;
};

struct EvolutionSolution {
  SampledSignal u;
  double residual = 0.0;  // sup_t ||u(t) - u0 - A int_0^t u - int_0^t phi||
  double sup_norm = 0.0;
};

// Exponential integrator with cubic interpolation of the forcing.
EvolutionSolution solve_evolution(const EvolutionProblem& p);
// Residual of the integrated equation with cumulative Simpson quadrature.
double evolution_residual(const EvolutionProblem& p, const SampledSignal& u);

std::vector<cplx> eigenvalues(const Eigen::MatrixXcd& A);

}  // namespace redspec
