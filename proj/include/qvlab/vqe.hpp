#pragma once

#include <string>
#include <vector>

#include "qvlab/ansatz.hpp"
#include "qvlab/density.hpp"
#include "qvlab/optimize.hpp"
#include "qvlab/oracle.hpp"
#include "qvlab/pauli.hpp"

namespace qvlab {

struct VqeResult {
  double energy = 0.0;
  double exact_e0 = 0.0;
  double energy_error = 0.0;
  double fidelity = 0.0;
  std::vector<double> parameters;
  GateCounts gates;
  long evaluations = 0;
  int iterations = 0;
  bool converged = false;
  OptimizerKind optimizer = OptimizerKind::GradientFree;
  double noise_p1 = 0.0;
  std::vector<double> per_term_expectations;
};

struct PoolOp {
  std::string id;
  PauliSum generator;  // anti-Hermitian
};

// Singlet-adapted singles and pair doubles for a closed-shell register of
// n_occupied + n_virtual spin orbitals (both even), deduplicated and
// JW-transformed. Spatial orbital i maps to qubits {i, n_spatial + i} for
// the alpha/beta spin channels.
std::vector<PoolOp> build_pool(int n_occupied, int n_virtual);

// Occupied qubits of the closed-shell reference for the same layout.
std::vector<int> reference_occupation(int n_occupied, int n_virtual);

// g_k = Tr(rho [H, A_k]) via dense matrices; real up to a 1e-10 residue.
std::vector<double> pool_gradients(const DensityMatrix& rho, const PauliSum& h,
                                   std::span<const PoolOp> pool);

VqeResult run_vqe(const PauliSum& h, const AnsatzSpec& spec,
                  const NoiseModel& noise, const OptimizerConfig& cfg);
// Same, for an already compiled circuit (used for randomized compilations).
VqeResult run_vqe_circuit(const PauliSum& h, const Circuit& circuit,
                          const NoiseModel& noise, const OptimizerConfig& cfg);

struct AdaptOptions {
  double grad_threshold = 1e-2;  // on the gradient-vector norm
  int max_depth = 20;
  bool noiseless_gradients = false;  // evaluate pool gradients at p = 0
  bool use_inf_norm = false;         // stopping norm; default two-norm
  int n_occupied = -1;               // -1: half filling
  int n_virtual = -1;
};

struct AdaptIteration {
  int selected = -1;
  std::string selected_id;
  double grad_norm = 0.0;
  std::vector<double> gradients;
  std::vector<double> params;
  double energy = 0.0;
  double fidelity = 0.0;
  long evaluations = 0;
};

struct AdaptResult {
  std::vector<AdaptIteration> iterations;
  VqeResult final_result;
  bool converged = false;
};

// Grows the ansatz from the Hartree-Fock reference: each round simulates the
// current optimum (with noise unless noiseless_gradients), computes pool
// gradients, stops when their norm falls below grad_threshold, otherwise
// appends the argmax-|gradient| generator (ties to the lowest pool index,
// repeats allowed) and re-optimizes all parameters warm-started from the
// previous optimum.
AdaptResult run_adapt(const PauliSum& h, const NoiseModel& noise,
                      const OptimizerConfig& cfg, const AdaptOptions& opts);

}  // namespace qvlab
