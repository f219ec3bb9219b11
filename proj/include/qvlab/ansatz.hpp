#pragma once

#include <span>
#include <vector>

#include "qvlab/circuit.hpp"
#include "qvlab/pauli.hpp"

namespace qvlab {

enum class AnsatzFamily { Uccd, SingletUccsd, Adapt };

const char* family_name(AnsatzFamily f);

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::Uccd;
  int n_qubits = 4;
  std::vector<int> reference_occupation = {0, 2};
  // Adapt only: anti-Hermitian generators applied in order, generator k
  // driven by slot k.
  std::vector<PauliSum> generators;

  static AnsatzSpec uccd();
  static AnsatzSpec singlet_uccsd();
  static AnsatzSpec adapt(int n_qubits, std::vector<int> occupation,
                          std::vector<PauliSum> generators);
};

// Appends gates implementing exp(-i (scale*theta_slot / 2) P): basis changes
// (H for X, RX(+-pi/2) for Y), a CNOT ladder over the support, RZ(scale*theta)
// on the last support qubit, then the inverse sequence. A -1 string phase is
// folded into the scale; +-i phases are rejected.
void append_exp_pauli(Circuit& c, const PauliString& p, int slot, double scale);

// Single-block circuit with slots theta0..theta<slot>; the block uses `slot`.
Circuit exp_pauli_circuit(const PauliString& p, int slot, double scale);

// Appends the Trotter product of an anti-Hermitian generator sum_m i g_m P_m:
// one exp_pauli block per term in canonical term order, each driven by the
// same slot with per-term scale -2 g_m, so the bound block equals
// exp(theta * generator) when the terms commute.
void append_generator(Circuit& c, const PauliSum& anti_hermitian, int slot);

Circuit build_reference(int n_qubits, std::span<const int> occupation);
Circuit build_uccd(const AnsatzSpec& spec);
Circuit build_singlet_uccsd(const AnsatzSpec& spec);
Circuit build_ansatz(const AnsatzSpec& spec);

// The doubles generator a†_a a†_b a_j a_i - h.c. for the 4-qubit two-electron
// register (occupied {0,2} -> virtual {1,3}), JW-transformed.
PauliSum doubles_generator_4q();
// Symmetrized singlet single excitation, (1/sqrt(2)) sum over both spins.
PauliSum singles_generator_4q();

}  // namespace qvlab
