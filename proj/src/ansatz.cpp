#include "qvlab/ansatz.hpp"

#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "qvlab/fermion.hpp"

namespace qvlab {

const char* family_name(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::Uccd: return "uccd";
    case AnsatzFamily::SingletUccsd: return "uccsd-singlet";
    case AnsatzFamily::Adapt: return "adapt";
  }
  return "?";
}

AnsatzSpec AnsatzSpec::uccd() { return AnsatzSpec{}; }

AnsatzSpec AnsatzSpec::singlet_uccsd() {
  AnsatzSpec s;
  s.family = AnsatzFamily::SingletUccsd;
  return s;
}

AnsatzSpec AnsatzSpec::adapt(int n_qubits, std::vector<int> occupation,
                             std::vector<PauliSum> generators) {
  AnsatzSpec s;
  s.family = AnsatzFamily::Adapt;
  s.n_qubits = n_qubits;
  s.reference_occupation = std::move(occupation);
  s.generators = std::move(generators);
  return s;
}

void append_exp_pauli(Circuit& c, const PauliString& p, int slot,
                      double scale) {
  if (p.n_qubits() != c.n_qubits())
    throw std::invalid_argument("Pauli string does not fit the register");
  if (p.is_identity_word())
    throw std::invalid_argument(
        "degenerate generator: cannot exponentiate the identity string");
  if (p.phase_power() == 1 || p.phase_power() == 3)
    throw std::invalid_argument("Pauli exponential requires a +-1 phase");
  if (p.phase_power() == 2) scale = -scale;

  const std::vector<int> support = p.support();
  constexpr double half_pi = std::numbers::pi / 2.0;

  // Rotate X and Y letters onto the Z axis.
  for (int q : support) {
    if (p.letter(q) == Pauli::X)
      c.append(Gate::h(q));
    else if (p.letter(q) == Pauli::Y)
      c.append(Gate::rx(q, AngleExpr::constant(half_pi)));
  }
  // Parity ladder onto the last support qubit.
  for (std::size_t i = 0; i + 1 < support.size(); ++i)
    c.append(Gate::cnot(support[i], support[i + 1]));
  c.append(Gate::rz(support.back(), AngleExpr::parameter(slot, scale)));
  // Exact inverse.
  for (std::size_t i = support.size() - 1; i >= 1; --i)
    c.append(Gate::cnot(support[i - 1], support[i]));
  for (int q : support) {
    if (p.letter(q) == Pauli::X)
      c.append(Gate::h(q));
    else if (p.letter(q) == Pauli::Y)
      c.append(Gate::rx(q, AngleExpr::constant(-half_pi)));
  }
}

Circuit exp_pauli_circuit(const PauliString& p, int slot, double scale) {
  if (slot < 0) throw std::invalid_argument("slot index must be >= 0");
  Circuit c(p.n_qubits());
  for (int s = 0; s <= slot; ++s) c.add_slot("theta" + std::to_string(s));
  append_exp_pauli(c, p, slot, scale);
  return c;
}

void append_generator(Circuit& c, const PauliSum& anti_hermitian, int slot) {
  if (anti_hermitian.empty())
    throw std::invalid_argument("degenerate generator: empty operator");
  if (!anti_hermitian.is_anti_hermitian(1e-12))
    throw std::invalid_argument("generator must be anti-Hermitian");
  // Each term is i g_m P_m; exp(theta i g_m P_m) = exp(-i (-2 g_m) theta/2 P_m).
  for (int m = 0; m < anti_hermitian.size(); ++m) {
    const double g = anti_hermitian.coeff(m).imag();
    append_exp_pauli(c, anti_hermitian.term(m), slot, -2.0 * g);
  }
}

Circuit build_reference(int n_qubits, std::span<const int> occupation) {
  Circuit c(n_qubits);
  std::set<int> seen;
  for (int q : occupation) {
    if (q < 0 || q >= n_qubits)
      throw std::out_of_range("occupied index outside the register");
    if (!seen.insert(q).second)
      throw std::invalid_argument("occupation has a repeated index");
  }
  for (int q : seen) c.append(Gate::x(q));
  return c;
}

Circuit build_uccd(const AnsatzSpec& spec) {
  if (spec.family != AnsatzFamily::Uccd)
    throw std::invalid_argument("spec family is not uccd");
  if (spec.n_qubits != 4)
    throw std::invalid_argument("uccd is defined on the 4-qubit register");
  Circuit c = build_reference(spec.n_qubits, spec.reference_occupation);
  c.add_slot("theta0");
  append_exp_pauli(c, PauliString(4, "YXXX"), 0, 1.0);
  return c;
}

Circuit build_singlet_uccsd(const AnsatzSpec& spec) {
  if (spec.family != AnsatzFamily::SingletUccsd)
    throw std::invalid_argument("spec family is not uccsd");
  if (spec.n_qubits != 4 || spec.reference_occupation.size() != 2)
    throw std::invalid_argument(
        "unsupported model: uccsd needs the 4-qubit, 2-electron register");
  Circuit c = build_reference(spec.n_qubits, spec.reference_occupation);
  c.add_slot("theta0");
  c.add_slot("theta1");
  append_generator(c, singles_generator_4q(), 0);
  append_generator(c, doubles_generator_4q(), 1);
  return c;
}

Circuit build_ansatz(const AnsatzSpec& spec) {
  switch (spec.family) {
    case AnsatzFamily::Uccd: return build_uccd(spec);
    case AnsatzFamily::SingletUccsd: return build_singlet_uccsd(spec);
    case AnsatzFamily::Adapt: {
      Circuit c = build_reference(spec.n_qubits, spec.reference_occupation);
      for (std::size_t k = 0; k < spec.generators.size(); ++k) {
        c.add_slot("theta" + std::to_string(k));
        append_generator(c, spec.generators[k], static_cast<int>(k));
      }
      return c;
    }
  }
  throw std::invalid_argument("unknown ansatz family");
}

PauliSum doubles_generator_4q() {
  const FermionOp d = FermionOp::creation(1) * FermionOp::creation(3) *
                      FermionOp::annihilation(2) * FermionOp::annihilation(0);
  return jordan_wigner(d - d.adjoint(), 4);
}

PauliSum singles_generator_4q() {
  const FermionOp up = FermionOp::creation(1) * FermionOp::annihilation(0);
  const FermionOp down = FermionOp::creation(3) * FermionOp::annihilation(2);
  FermionOp s = up - up.adjoint() + down - down.adjoint();
  s *= 1.0 / std::numbers::sqrt2;
  return jordan_wigner(s, 4);
}

}  // namespace qvlab
