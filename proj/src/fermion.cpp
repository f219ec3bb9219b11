#include "qvlab/fermion.hpp"

#include <algorithm>
#include <stdexcept>

namespace qvlab {

FermionOp FermionOp::creation(int mode) {
  if (mode < 0) throw std::invalid_argument("mode index must be >= 0");
  FermionOp f;
  f.terms_.push_back({cplx{1.0, 0.0}, {{mode, true}}});
  return f;
}

FermionOp FermionOp::annihilation(int mode) {
  if (mode < 0) throw std::invalid_argument("mode index must be >= 0");
  FermionOp f;
  f.terms_.push_back({cplx{1.0, 0.0}, {{mode, false}}});
  return f;
}

int FermionOp::max_mode() const {
  int m = -1;
  for (const auto& t : terms_)
    for (const auto& fac : t.factors) m = std::max(m, fac.mode);
  return m;
}

FermionOp FermionOp::adjoint() const {
  FermionOp out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) {
    t.coeff = std::conj(t.coeff);
    std::reverse(t.factors.begin(), t.factors.end());
    for (auto& fac : t.factors) fac.dagger = !fac.dagger;
  }
  return out;
}

FermionOp& FermionOp::operator+=(const FermionOp& rhs) {
  terms_.insert(terms_.end(), rhs.terms_.begin(), rhs.terms_.end());
  return *this;
}

FermionOp& FermionOp::operator-=(const FermionOp& rhs) {
  for (const auto& t : rhs.terms_) {
    terms_.push_back(t);
    terms_.back().coeff = -terms_.back().coeff;
  }
  return *this;
}

FermionOp& FermionOp::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  return *this;
}

FermionOp operator+(FermionOp lhs, const FermionOp& rhs) { return lhs += rhs; }
FermionOp operator-(FermionOp lhs, const FermionOp& rhs) { return lhs -= rhs; }
FermionOp operator*(cplx s, FermionOp f) { return f *= s; }

FermionOp operator*(const FermionOp& a, const FermionOp& b) {
  FermionOp out;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      FermionTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.factors = ta.factors;
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.terms_.push_back(std::move(t));
    }
  return out;
}

PauliSum jordan_wigner(const FermionOp& f, int n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("need at least one qubit");
  if (f.max_mode() >= n_qubits)
    throw std::invalid_argument("mode index exceeds qubit register");
  PauliSum out(n_qubits);
  for (const auto& t : f.terms()) {
    // Each factor expands to (Z...Z)(X ∓ iY)/2; multiply the two-string
    // expansions left to right.
    PauliSum term = PauliSum::identity(n_qubits, t.coeff);
    for (const auto& fac : t.factors) {
      PauliSum ladder(n_qubits);
      PauliString x(n_qubits);
      PauliString y(n_qubits);
      for (int q = 0; q < fac.mode; ++q) {
        x.set_letter(q, Pauli::Z);
        y.set_letter(q, Pauli::Z);
      }
      x.set_letter(fac.mode, Pauli::X);
      y.set_letter(fac.mode, Pauli::Y);
      ladder.add_term(0.5, x);
      // a† has -i/2 Y, a has +i/2 Y.
      ladder.add_term(fac.dagger ? cplx{0.0, -0.5} : cplx{0.0, 0.5}, y);
      term = term * ladder;
    }
    out += term;
  }
  return out;
}

}  // namespace qvlab
