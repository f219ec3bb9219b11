#include "qvlab/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qvlab {

namespace {

// Householder reduction of a Hermitian matrix to tridiagonal form,
// accumulating the unitary Q so that input = Q T Q†. Writes the real
// diagonal into d and the complex subdiagonal T(i+1, i) into e.
void tridiagonalize(Matrix& b, Matrix& q, std::vector<double>& d,
                    std::vector<cplx>& e) {
  const int n = b.dim();
  for (int k = 0; k + 2 < n; ++k) {
    double col2 = 0.0, tail2 = 0.0;
    for (int j = k + 1; j < n; ++j) col2 += std::norm(b(j, k));
    for (int j = k + 2; j < n; ++j) tail2 += std::norm(b(j, k));
    if (col2 == 0.0) {
      e[k] = 0.0;
      continue;
    }
    if (tail2 == 0.0) {
      e[k] = b(k + 1, k);
      continue;
    }
    const double beta = std::sqrt(col2);
    const cplx x0 = b(k + 1, k);
    // Reflect the column onto alpha*e0 with alpha chosen so v†x is real.
    const cplx alpha =
        (std::abs(x0) == 0.0) ? cplx{-beta, 0.0} : -(x0 / std::abs(x0)) * beta;

    std::vector<cplx> v(n, cplx{0.0, 0.0});
    for (int j = k + 1; j < n; ++j) v[j] = b(j, k);
    v[k + 1] -= alpha;
    double vv = 0.0;
    for (int j = k + 1; j < n; ++j) vv += std::norm(v[j]);
    const double tau = 2.0 / vv;

    // Rank-2 similarity update: w = tau B v - (tau^2/2)(v† B v) v, then
    // B <- B - w v† - v w† on the trailing block.
    std::vector<cplx> w(n, cplx{0.0, 0.0});
    for (int r = k + 1; r < n; ++r) {
      cplx acc = 0.0;
      for (int c = k + 1; c < n; ++c) acc += b(r, c) * v[c];
      w[r] = tau * acc;
    }
    cplx kappa = 0.0;
    for (int j = k + 1; j < n; ++j) kappa += std::conj(v[j]) * w[j];
    kappa *= tau / 2.0;
    for (int j = k + 1; j < n; ++j) w[j] -= kappa * v[j];
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        b(r, c) -= w[r] * std::conj(v[c]) + v[r] * std::conj(w[c]);

    b(k + 1, k) = alpha;
    b(k, k + 1) = std::conj(alpha);
    for (int j = k + 2; j < n; ++j) {
      b(j, k) = 0.0;
      b(k, j) = 0.0;
    }
    e[k] = alpha;

    // Q <- Q H with H = I - tau v v†.
    for (int r = 0; r < n; ++r) {
      cplx acc = 0.0;
      for (int j = k + 1; j < n; ++j) acc += q(r, j) * v[j];
      acc *= tau;
      for (int j = k + 1; j < n; ++j) q(r, j) -= acc * std::conj(v[j]);
    }
  }
  if (n >= 2) e[n - 2] = b(n - 1, n - 2);
  for (int i = 0; i < n; ++i) d[i] = b(i, i).real();
}

// Implicit-shift QL iteration on a real symmetric tridiagonal matrix with
// eigenvector accumulation: d holds the diagonal, e[i] couples i and i+1
// (e[n-1] is scratch). Rotations are applied to the columns of vec.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       Matrix& vec) {
  const int n = static_cast<int>(d.size());
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        double thresh = std::numeric_limits<double>::epsilon() * dd;
        if (thresh == 0.0) thresh = std::numeric_limits<double>::min();
        if (std::abs(e[m]) <= thresh) break;
      }
      if (m != l) {
        if (iter++ == 64)
          throw std::runtime_error("eigensolver failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double bb = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * bb;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - bb;
          for (int k = 0; k < vec.dim(); ++k) {
            const cplx fk = vec(k, i + 1);
            vec(k, i + 1) = s * vec(k, i) + c * fk;
            vec(k, i) = c * vec(k, i) - s * fk;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigResult eigh(const Matrix& hermitian, double hermiticity_tol) {
  const int n = hermitian.dim();
  if (n == 0) return {};
  if (!hermitian.is_hermitian(hermiticity_tol))
    throw std::invalid_argument("eigh requires a Hermitian matrix");

  // Symmetrize away roundoff before reducing.
  Matrix b(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      b(r, c) = 0.5 * (hermitian(r, c) + std::conj(hermitian(c, r)));

  Matrix q = Matrix::identity(n);
  std::vector<double> d(n, 0.0);
  std::vector<cplx> esub(n, cplx{0.0, 0.0});
  tridiagonalize(b, q, d, esub);

  // Rotate the complex subdiagonal onto the real nonnegative axis with a
  // diagonal phase similarity, folded into the eigenvector columns.
  std::vector<double> e(n, 0.0);
  std::vector<cplx> f(n, cplx{1.0, 0.0});
  for (int i = 0; i + 1 < n; ++i) {
    const cplx prod = esub[i] * f[i];
    const double mag = std::abs(prod);
    e[i] = mag;
    f[i + 1] = (mag == 0.0) ? f[i] : prod / mag;
  }
  for (int c = 0; c < n; ++c)
    if (f[c] != cplx{1.0, 0.0})
      for (int r = 0; r < n; ++r) q(r, c) *= f[c];

  ql_implicit_shift(d, e, q);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int a, int bb) { return d[a] < d[bb]; });

  EigResult res;
  res.eigenvalues.resize(n);
  res.vectors = Matrix(n);
  for (int k = 0; k < n; ++k) {
    res.eigenvalues[k] = d[order[k]];
    for (int r = 0; r < n; ++r) res.vectors(r, k) = q(r, order[k]);
  }
  return res;
}

}  // namespace qvlab
