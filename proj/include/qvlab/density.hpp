#pragma once

#include <cstdint>
#include <span>

#include "qvlab/circuit.hpp"
#include "qvlab/matrix.hpp"
#include "qvlab/pauli.hpp"

namespace qvlab {

struct NoiseModel {
  double p1 = 0.0;
  double p2 = 0.0;
  bool exempt_diagonal = true;

  NoiseModel() = default;  // noiseless

  // p2 = 10*p1; requires 0 <= p1 <= 0.1 so that p2 <= 1.
  static NoiseModel depolarizing(double p1, bool exempt_diagonal = true);

  bool noiseless() const { return p1 == 0.0 && p2 == 0.0; }
};

class DensityMatrix {
 public:
  explicit DensityMatrix(int n_qubits);  // |0...0><0...0|
  static DensityMatrix basis_state(int n_qubits, std::uint64_t index);
  static DensityMatrix from_statevector(const Vector& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  double trace_real() const;
  double purity() const;  // Tr(rho^2)

 private:
  int n_qubits_;
  Matrix m_;
};

DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p);

// Conjugates by the gate unitary, then applies depolarizing noise: p1 on the
// qubit of H/X/Y/RX/RY/U1Q; p2 on target then control for CNOT; Z and RZ are
// exempt while noise.exempt_diagonal is set.
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g,
                         std::span<const double> params,
                         const NoiseModel& noise);

DensityMatrix run_circuit(const Circuit& c, std::span<const double> params,
                          const NoiseModel& noise);
DensityMatrix run_circuit(const Circuit& c, std::span<const double> params,
                          const NoiseModel& noise,
                          const DensityMatrix& initial);

// sum_j c_j Tr(rho P_j); requires Hermitian obs and asserts the imaginary
// residue stays below 1e-10.
double expectation(const DensityMatrix& rho, const PauliSum& obs);
std::vector<double> per_term_expectations(const DensityMatrix& rho,
                                          const PauliSum& obs);

// <psi| rho |psi> for a normalized pure target.
double fidelity(const DensityMatrix& rho, const Vector& psi);

}  // namespace qvlab
