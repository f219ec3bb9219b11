#include "qvlab/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "qvlab/kernels.hpp"

namespace qvlab {

Matrix::Matrix(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("matrix dimension must be >= 0");
  a_.assign(static_cast<std::size_t>(dim) * dim, cplx{0.0, 0.0});
}

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dim mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (dim_ != rhs.dim_) throw std::invalid_argument("matrix dim mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix out(dim_);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : a_) m = std::max(m, std::abs(v));
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  for (int r = 0; r < dim_; ++r)
    for (int c = r; c < dim_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol)
        return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  const Matrix p = adjoint() * (*this);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) {
      const cplx want = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(p(r, c) - want) > tol) return false;
    }
  return true;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(cplx s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dim mismatch");
  Matrix out(a.dim());
  kernels::matmul(a.data(), b.data(), out.data(), a.dim());
  return out;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (static_cast<std::size_t>(m.dim()) != v.size())
    throw std::invalid_argument("matrix-vector dim mismatch");
  Vector out(v.size(), cplx{0.0, 0.0});
  for (int r = 0; r < m.dim(); ++r) {
    cplx acc = 0.0;
    for (int c = 0; c < m.dim(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  for (int ra = 0; ra < a.dim(); ++ra)
    for (int ca = 0; ca < a.dim(); ++ca) {
      const cplx f = a(ra, ca);
      if (f == cplx{0.0, 0.0}) continue;
      for (int rb = 0; rb < b.dim(); ++rb)
        for (int cb = 0; cb < b.dim(); ++cb)
          out(ra * b.dim() + rb, ca * b.dim() + cb) = f * b(rb, cb);
    }
  return out;
}

Matrix outer(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("outer dim mismatch");
  Matrix out(static_cast<int>(u.size()));
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c)
      out(static_cast<int>(r), static_cast<int>(c)) = u[r] * std::conj(v[c]);
  return out;
}

cplx inner(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("inner dim mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double norm(const Vector& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

void normalize(Vector& v) {
  const double n = norm(v);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  for (auto& x : v) x /= n;
}

}  // namespace qvlab
