#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qvlab/ansatz.hpp"
#include "qvlab/density.hpp"
#include "qvlab/matrix.hpp"
#include "qvlab/pauli.hpp"

namespace qvlab {

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, Ha
  Vector ground_state;              // normalized
  bool degenerate = false;          // gap to the next level < 1e-9
  int degeneracy = 1;
  // All eigenvectors of the (near-)degenerate ground level, ground_state
  // first; fidelity for a degenerate level uses the subspace projector.
  std::vector<Vector> ground_space;

  double ground_energy() const { return eigenvalues.front(); }
};

// Exact diagonalization of a Hermitian PauliSum (n_qubits <= 10).
SpectrumResult ground_state(const PauliSum& h);

// Tr(rho P_ground); reduces to <v|rho|v> for a simple ground level.
double ground_space_fidelity(const DensityMatrix& rho,
                             const SpectrumResult& spectrum);

// exp(-i (angle/2) G) for Hermitian G, by eigendecomposition.
Matrix matrix_exp(const PauliSum& hermitian, double angle);

// exp(-i (angle/2) G) |reference>.
Vector matrix_exp_state(const PauliSum& hermitian, double angle,
                        std::uint64_t reference);

// Statevector application of a bound circuit; an independent code path from
// the density-matrix simulator, used for cross-checks.
Vector apply_circuit_state(const Circuit& c, std::span<const double> params,
                           Vector psi);
Matrix circuit_unitary(const Circuit& c, std::span<const double> params);

struct ScanPoint {
  std::vector<double> params;
  double energy;
  double fidelity;
};

// Runs the compiled ansatz at every grid point through the noisy simulator;
// the table minimum serves as a brute-force optimum oracle. Points are
// evaluated in parallel with deterministic ordering by grid index.
std::vector<ScanPoint> energy_scan(const AnsatzSpec& ansatz, const PauliSum& h,
                                   std::span<const std::vector<double>> grid,
                                   const NoiseModel& noise);

std::vector<double> theta_grid(double lo, double hi, int points);

}  // namespace qvlab
