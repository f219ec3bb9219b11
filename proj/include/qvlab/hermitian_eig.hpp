#pragma once

#include <vector>

#include "qvlab/matrix.hpp"

namespace qvlab {

struct EigResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix vectors;                   // column k is the k-th eigenvector
};

// Full eigendecomposition of a complex Hermitian matrix: Householder
// reduction to real symmetric tridiagonal form followed by implicit-shift QL
// iteration with eigenvector accumulation.
EigResult eigh(const Matrix& hermitian, double hermiticity_tol = 1e-9);

}  // namespace qvlab
