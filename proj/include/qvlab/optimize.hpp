#pragma once

#include <functional>
#include <span>
#include <vector>

namespace qvlab {

// Deterministic scalar objective; throws std::runtime_error on a non-finite
// value and counts every evaluation.
struct Objective {
  int arity = 1;
  std::function<double(std::span<const double>)> fn;
  long evaluations = 0;

  double operator()(std::span<const double> x);
};

enum class OptimizerKind { GradientFree, QuasiNewton };

const char* optimizer_name(OptimizerKind k);

struct OptimizerConfig {
  OptimizerKind kind = OptimizerKind::GradientFree;
  // Gradient-free: objective-evaluation budget. Quasi-Newton: outer
  // iteration cap.
  int max_iterations = 1000;
  // Gradient-free: final trust-region radius. Quasi-Newton: gradient
  // two-norm threshold.
  double tolerance = 1e-6;
  double fd_step = 1e-4;      // quasi-Newton central-difference step
  double initial_step = 0.5;  // initial trust radius / line-search scale
  std::vector<double> initial_point;  // empty means all zeros

  static OptimizerConfig gradient_free();
  static OptimizerConfig quasi_newton();
};

struct OptimizeResult {
  std::vector<double> params;
  double value = 0.0;
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// Linear-surrogate trust-region descent (COBYLA-style, unconstrained): fits
// a linear model on an n+1 point simplex, steps against the model gradient
// within the trust radius, and shrinks the radius when the model stops
// predicting decrease. Converged when the radius reaches cfg.tolerance.
OptimizeResult minimize_gradient_free(Objective& obj,
                                      const OptimizerConfig& cfg);

// Limited-memory BFGS with central finite-difference gradients and an
// Armijo backtracking line search. Converged when |g|_2 < cfg.tolerance;
// line-search failure returns best-found with converged = false.
OptimizeResult minimize_quasi_newton(Objective& obj,
                                     const OptimizerConfig& cfg);

// Central finite-difference gradient used by the quasi-Newton path.
std::vector<double> fd_gradient(Objective& obj, std::span<const double> x,
                                double h);

OptimizeResult minimize(Objective& obj, const OptimizerConfig& cfg);

}  // namespace qvlab
