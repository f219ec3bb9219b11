#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qvlab {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

// Dense square complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim);
  static Matrix identity(int dim);

  int dim() const { return dim_; }
  cplx& operator()(int r, int c) {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }
  const cplx& operator()(int r, int c) const {
    return a_[static_cast<std::size_t>(r) * dim_ + c];
  }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }
  std::size_t size() const { return a_.size(); }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx s);

  Matrix adjoint() const;
  cplx trace() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;
  bool is_unitary(double tol) const;

 private:
  int dim_ = 0;
  std::vector<cplx> a_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(cplx s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

// Kronecker product; index convention (ia*b.dim + ib, ja*b.dim + jb).
Matrix kron(const Matrix& a, const Matrix& b);

// |u><v|
Matrix outer(const Vector& u, const Vector& v);

// <u|v> with conjugation on u.
cplx inner(const Vector& u, const Vector& v);

double norm(const Vector& v);
void normalize(Vector& v);

}  // namespace qvlab
