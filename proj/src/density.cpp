#include "qvlab/density.hpp"

#include <cmath>
#include <stdexcept>

#include "qvlab/kernels.hpp"

namespace qvlab {

NoiseModel NoiseModel::depolarizing(double p1, bool exempt_diagonal) {
  if (!(p1 >= 0.0 && p1 <= 0.1))
    throw std::invalid_argument("p1 must lie in [0, 0.1]");
  NoiseModel n;
  n.p1 = p1;
  n.p2 = 10.0 * p1;
  n.exempt_diagonal = exempt_diagonal;
  return n;
}

DensityMatrix::DensityMatrix(int n_qubits)
    : n_qubits_(n_qubits), m_(1 << n_qubits) {
  if (n_qubits <= 0 || n_qubits > 10)
    throw std::invalid_argument("density matrices support 1 to 10 qubits");
  m_(0, 0) = 1.0;
}

DensityMatrix DensityMatrix::basis_state(int n_qubits, std::uint64_t index) {
  DensityMatrix rho(n_qubits);
  if (index >= static_cast<std::uint64_t>(rho.dim()))
    throw std::out_of_range("basis index outside the register");
  rho.m_(0, 0) = 0.0;
  rho.m_(static_cast<int>(index), static_cast<int>(index)) = 1.0;
  return rho;
}

DensityMatrix DensityMatrix::from_statevector(const Vector& psi) {
  int n = 0;
  while ((std::size_t{1} << n) < psi.size()) ++n;
  if ((std::size_t{1} << n) != psi.size())
    throw std::invalid_argument("statevector length is not a power of two");
  if (std::abs(norm(psi) - 1.0) > 1e-12)
    throw std::invalid_argument("statevector must be normalized");
  DensityMatrix rho(n);
  rho.m_ = outer(psi, psi);
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  DensityMatrix rho(n_qubits);
  rho.m_(0, 0) = 0.0;
  const double w = 1.0 / rho.dim();
  for (int i = 0; i < rho.dim(); ++i) rho.m_(i, i) = w;
  return rho;
}

double DensityMatrix::trace_real() const { return m_.trace().real(); }

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return kernels::sum_abs2(m_.data(), m_.size());
}

DensityMatrix depolarize(const DensityMatrix& rho, int qubit, double p) {
  if (qubit < 0 || qubit >= rho.n_qubits())
    throw std::out_of_range("qubit index outside the register");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
  DensityMatrix out = rho;
  kernels::depolarize(out.matrix().data(), out.n_qubits(), qubit, p);
  return out;
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& g,
                         std::span<const double> params,
                         const NoiseModel& noise) {
  DensityMatrix out = rho;
  cplx* data = out.matrix().data();
  const int n = out.n_qubits();
  if (g.kind == GateKind::CNOT) {
    kernels::apply_cnot(data, n, g.control, g.target);
    if (noise.p2 > 0.0) {
      kernels::depolarize(data, n, g.target, noise.p2);
      kernels::depolarize(data, n, g.control, noise.p2);
    }
    return out;
  }
  const Matrix u = g.matrix2(params);
  kernels::apply_1q(data, n, g.target, {u(0, 0), u(0, 1), u(1, 0), u(1, 1)});
  const bool diagonal = g.kind == GateKind::Z || g.kind == GateKind::RZ;
  if (noise.p1 > 0.0 && !(diagonal && noise.exempt_diagonal))
    kernels::depolarize(data, n, g.target, noise.p1);
  return out;
}

DensityMatrix run_circuit(const Circuit& c, std::span<const double> params,
                          const NoiseModel& noise,
                          const DensityMatrix& initial) {
  if (initial.n_qubits() != c.n_qubits())
    throw std::invalid_argument("initial state does not fit the register");
  if (static_cast<int>(params.size()) != c.n_slots())
    throw std::invalid_argument("parameter count does not match circuit slots");
  DensityMatrix rho = initial;
  for (const Gate& g : c.gates()) rho = apply_gate(rho, g, params, noise);
  return rho;
}

DensityMatrix run_circuit(const Circuit& c, std::span<const double> params,
                          const NoiseModel& noise) {
  return run_circuit(c, params, noise, DensityMatrix(c.n_qubits()));
}

double expectation(const DensityMatrix& rho, const PauliSum& obs) {
  if (obs.n_qubits() != rho.n_qubits())
    throw std::invalid_argument("observable does not fit the register");
  if (!obs.is_hermitian())
    throw std::invalid_argument("expectation requires a Hermitian observable");
  cplx acc = 0.0;
  for (int i = 0; i < obs.size(); ++i)
    acc += obs.coeff(i) * kernels::pauli_expectation(rho.matrix().data(),
                                                     rho.n_qubits(),
                                                     obs.term(i));
  if (std::abs(acc.imag()) >= 1e-10)
    throw std::runtime_error("expectation has a non-negligible imaginary part");
  return acc.real();
}

std::vector<double> per_term_expectations(const DensityMatrix& rho,
                                          const PauliSum& obs) {
  if (obs.n_qubits() != rho.n_qubits())
    throw std::invalid_argument("observable does not fit the register");
  std::vector<double> vals(obs.size());
  for (int i = 0; i < obs.size(); ++i) {
    const cplx v = kernels::pauli_expectation(rho.matrix().data(),
                                              rho.n_qubits(), obs.term(i));
    if (std::abs(v.imag()) >= 1e-10)
      throw std::runtime_error(
          "expectation has a non-negligible imaginary part");
    vals[i] = v.real();
  }
  return vals;
}

double fidelity(const DensityMatrix& rho, const Vector& psi) {
  if (psi.size() != static_cast<std::size_t>(rho.dim()))
    throw std::invalid_argument("target state does not fit the register");
  if (std::abs(norm(psi) - 1.0) > 1e-12)
    throw std::invalid_argument("target state must be normalized");
  // <psi| rho |psi>
  const Vector rp = rho.matrix() * psi;
  const cplx f = inner(psi, rp);
  return f.real();
}

}  // namespace qvlab
