#pragma once

#include <utility>
#include <vector>

#include "qvlab/pauli.hpp"

namespace qvlab {

// (mode index, dagger). A factor list is an operator product read left to
// right, i.e. the term {a, b, c} means the matrix product M_a M_b M_c.
struct FermionFactor {
  int mode;
  bool dagger;
};

struct FermionTerm {
  cplx coeff;
  std::vector<FermionFactor> factors;
};

// Sparse sum of products of fermionic creation/annihilation operators.
class FermionOp {
 public:
  FermionOp() = default;

  static FermionOp creation(int mode);
  static FermionOp annihilation(int mode);

  const std::vector<FermionTerm>& terms() const { return terms_; }
  int max_mode() const;  // -1 when empty

  FermionOp adjoint() const;

  FermionOp& operator+=(const FermionOp& rhs);
  FermionOp& operator-=(const FermionOp& rhs);
  FermionOp& operator*=(cplx s);

  friend FermionOp operator*(const FermionOp& a, const FermionOp& b);

 private:
  std::vector<FermionTerm> terms_;
};

FermionOp operator+(FermionOp lhs, const FermionOp& rhs);
FermionOp operator-(FermionOp lhs, const FermionOp& rhs);
FermionOp operator*(cplx s, FermionOp f);
FermionOp operator*(const FermionOp& a, const FermionOp& b);

// Jordan-Wigner transform: a†_p -> (prod_{i<p} Z_i) (X_p - iY_p)/2, so the
// number operator a†_p a_p maps to (I - Z_p)/2 and occupation is |1>.
PauliSum jordan_wigner(const FermionOp& f, int n_qubits);

}  // namespace qvlab
