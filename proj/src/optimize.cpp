#include "qvlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qvlab {

double Objective::operator()(std::span<const double> x) {
  if (static_cast<int>(x.size()) != arity)
    throw std::invalid_argument("objective arity mismatch");
  const double v = fn(x);
  ++evaluations;
  if (!std::isfinite(v))
    throw std::runtime_error("objective returned a non-finite value");
  return v;
}

const char* optimizer_name(OptimizerKind k) {
  switch (k) {
    case OptimizerKind::GradientFree: return "cobyla";
    case OptimizerKind::QuasiNewton: return "lbfgs";
  }
  return "?";
}

OptimizerConfig OptimizerConfig::gradient_free() {
  OptimizerConfig cfg;
  cfg.kind = OptimizerKind::GradientFree;
  cfg.max_iterations = 1000;
  cfg.tolerance = 1e-6;
  return cfg;
}

OptimizerConfig OptimizerConfig::quasi_newton() {
  OptimizerConfig cfg;
  cfg.kind = OptimizerKind::QuasiNewton;
  cfg.max_iterations = 500000;
  cfg.tolerance = 1e-4;
  return cfg;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Gaussian elimination with partial pivoting; false when singular.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-14) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return true;
}

std::vector<double> starting_point(const Objective& obj,
                                   const OptimizerConfig& cfg) {
  if (cfg.initial_point.empty())
    return std::vector<double>(obj.arity, 0.0);
  if (static_cast<int>(cfg.initial_point.size()) != obj.arity)
    throw std::invalid_argument("initial point arity mismatch");
  return cfg.initial_point;
}

}  // namespace

OptimizeResult minimize_gradient_free(Objective& obj,
                                      const OptimizerConfig& cfg) {
  if (cfg.kind != OptimizerKind::GradientFree)
    throw std::invalid_argument("config kind is not gradient_free");
  const int n = obj.arity;
  const long budget = cfg.max_iterations;
  const long start_evals = obj.evaluations;
  const auto remaining = [&] { return budget - (obj.evaluations - start_evals); };

  double rho = cfg.initial_step;
  const double rho_end = cfg.tolerance;

  OptimizeResult res;
  res.params = starting_point(obj, cfg);

  // n+1 point simplex around the start.
  std::vector<std::vector<double>> pts;
  std::vector<double> fv;
  pts.push_back(res.params);
  fv.push_back(obj(pts[0]));
  for (int i = 0; i < n && remaining() > 0; ++i) {
    std::vector<double> p = pts[0];
    p[i] += rho;
    pts.push_back(p);
    fv.push_back(obj(pts.back()));
  }

  auto best_of = [&] {
    return static_cast<std::size_t>(
        std::min_element(fv.begin(), fv.end()) - fv.begin());
  };
  auto worst_of = [&] {
    return static_cast<std::size_t>(
        std::max_element(fv.begin(), fv.end()) - fv.begin());
  };

  // Rebuild the simplex as best + rho e_i; returns false when the budget
  // cannot pay for the n fresh evaluations.
  auto respan = [&](std::size_t best) {
    if (remaining() < n) return false;
    const std::vector<double> center = pts[best];
    const double fcenter = fv[best];
    pts.assign(1, center);
    fv.assign(1, fcenter);
    for (int i = 0; i < n; ++i) {
      std::vector<double> p = center;
      p[i] += rho;
      pts.push_back(p);
      fv.push_back(obj(pts.back()));
    }
    return true;
  };

  bool converged = false;
  while (pts.size() == static_cast<std::size_t>(n) + 1 && remaining() > 0) {
    ++res.iterations;
    const std::size_t best = best_of();

    // Linear surrogate from simplex differences.
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = pts[i + 1][j] - pts[0][j];
      b[i] = fv[i + 1] - fv[0];
    }
    std::vector<double> g;
    if (!solve_linear(std::move(a), std::move(b), g)) {
      if (!respan(best)) break;  // degenerate simplex
      continue;
    }
    const double gnorm = norm2(g);
    if (gnorm < 1e-15) {
      // Flat model: either done or the simplex is too coarse.
      if (rho <= rho_end) {
        converged = true;
        break;
      }
      rho = std::max(rho / 2.0, rho_end);
      if (!respan(best)) break;
      continue;
    }

    std::vector<double> cand = pts[best];
    for (int i = 0; i < n; ++i) cand[i] -= (rho / gnorm) * g[i];
    if (remaining() < 1) break;
    const double fcand = obj(cand);

    if (fcand < fv[best] - 0.1 * rho * gnorm) {
      // The model predicted well; move on without touching rho.
      const std::size_t worst = worst_of();
      pts[worst] = std::move(cand);
      fv[worst] = fcand;
    } else {
      if (fcand < fv[best]) {
        const std::size_t worst = worst_of();
        pts[worst] = std::move(cand);
        fv[worst] = fcand;
      }
      if (rho <= rho_end) {
        converged = true;
        break;
      }
      rho = std::max(rho / 2.0, rho_end);
      if (!respan(best_of())) break;
    }
  }

  const std::size_t best = best_of();
  res.params = pts[best];
  res.value = fv[best];
  res.evaluations = obj.evaluations - start_evals;
  res.converged = converged;
  return res;
}

std::vector<double> fd_gradient(Objective& obj, std::span<const double> x,
                                double h) {
  std::vector<double> g(x.size());
  std::vector<double> p(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p[i] = x[i] + h;
    const double fp = obj(p);
    p[i] = x[i] - h;
    const double fm = obj(p);
    p[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

OptimizeResult minimize_quasi_newton(Objective& obj,
                                     const OptimizerConfig& cfg) {
  if (cfg.kind != OptimizerKind::QuasiNewton)
    throw std::invalid_argument("config kind is not quasi_newton");
  const int n = obj.arity;
  const long start_evals = obj.evaluations;
  constexpr int kMemory = 10;
  constexpr double kArmijo = 1e-4;

  OptimizeResult res;
  std::vector<double> x = starting_point(obj, cfg);
  double fx = obj(x);
  std::vector<double> g = fd_gradient(obj, x, cfg.fd_step);

  std::vector<std::vector<double>> s_hist, y_hist;
  std::vector<double> rho_hist;

  bool converged = false;
  while (res.iterations < cfg.max_iterations) {
    if (norm2(g) < cfg.tolerance) {
      converged = true;
      break;
    }
    ++res.iterations;

    // Two-loop recursion for d = -H g.
    std::vector<double> d(g.begin(), g.end());
    std::vector<double> alpha_hist(s_hist.size());
    for (int i = static_cast<int>(s_hist.size()) - 1; i >= 0; --i) {
      alpha_hist[i] = rho_hist[i] * dot(s_hist[i], d);
      for (int j = 0; j < n; ++j) d[j] -= alpha_hist[i] * y_hist[i][j];
    }
    if (!s_hist.empty()) {
      const double scale = dot(s_hist.back(), y_hist.back()) /
                           dot(y_hist.back(), y_hist.back());
      for (double& v : d) v *= scale;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = rho_hist[i] * dot(y_hist[i], d);
      for (int j = 0; j < n; ++j)
        d[j] += (alpha_hist[i] - beta) * s_hist[i][j];
    }
    for (double& v : d) v = -v;

    double slope = dot(g, d);
    if (slope >= 0.0) {
      // The approximation lost positive definiteness; restart steepest.
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      for (int j = 0; j < n; ++j) d[j] = -g[j];
      slope = dot(g, d);
    }

    double step = s_hist.empty()
                      ? std::min(cfg.initial_step, 1.0 / std::max(1.0, norm2(g)))
                      : 1.0;
    bool accepted = false;
    std::vector<double> xn(n);
    double fn_val = fx;
    for (int tries = 0; tries < 40; ++tries) {
      for (int j = 0; j < n; ++j) xn[j] = x[j] + step * d[j];
      fn_val = obj(xn);
      if (fn_val <= fx + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // line-search failure: report best-found

    std::vector<double> gn = fd_gradient(obj, xn, cfg.fd_step);
    std::vector<double> s(n), y(n);
    for (int j = 0; j < n; ++j) {
      s[j] = xn[j] - x[j];
      y[j] = gn[j] - g[j];
    }
    const double sy = dot(s, y);
    if (sy > 1e-12 * norm2(s) * norm2(y)) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > kMemory) {
        s_hist.erase(s_hist.begin());
        y_hist.erase(y_hist.begin());
        rho_hist.erase(rho_hist.begin());
      }
    }
    x = std::move(xn);
    fx = fn_val;
    g = std::move(gn);
  }

  res.params = x;
  res.value = fx;
  res.evaluations = obj.evaluations - start_evals;
  res.converged = converged;
  return res;
}

OptimizeResult minimize(Objective& obj, const OptimizerConfig& cfg) {
  if (cfg.kind == OptimizerKind::GradientFree)
    return minimize_gradient_free(obj, cfg);
  return minimize_quasi_newton(obj, cfg);
}

}  // namespace qvlab
