#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qvlab/ansatz.hpp"
#include "qvlab/optimize.hpp"
#include "qvlab/pauli.hpp"

namespace qvlab {

// Text format: `key: value` header lines (molecule, bond_length_angstrom,
// basis, n_qubits) followed by one `coefficient word` line per term, with
// words written qubit 0 first. `#` comments and blank lines are ignored.
struct HamiltonianFile {
  std::string molecule;
  double bond_length_angstrom = 0.0;
  std::string basis;
  int n_qubits = 0;
  std::vector<std::pair<double, std::string>> terms;

  PauliSum to_pauli_sum() const;
};

HamiltonianFile parse_hamiltonian(std::istream& in,
                                  const std::string& source_name = "<input>");
HamiltonianFile load_hamiltonian(const std::string& path);
std::string serialize_hamiltonian(const HamiltonianFile& h);

// The bundled 27-term NaH Hamiltonian (sto-3g, r = 1.91438 angstrom).
HamiltonianFile bundled_nah_file();
PauliSum bundled_nah();

// Sweep manifest: `hamiltonian:` paths (repeatable), and list-valued axes
// `p1:`, `optimizers:`, `ansatz:`, `seeds:`.
struct SweepManifest {
  std::vector<std::string> hamiltonian_paths;
  std::vector<double> p1_values{0.0, 1e-4, 1e-3, 1e-2};
  std::vector<OptimizerKind> optimizers{OptimizerKind::GradientFree};
  std::vector<AnsatzFamily> families{AnsatzFamily::Uccd};
  std::vector<std::uint64_t> seeds{0};
};

SweepManifest parse_manifest(std::istream& in,
                             const std::string& source_name = "<input>");
SweepManifest load_manifest(const std::string& path);

// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace qvlab
