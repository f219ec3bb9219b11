#include "qvlab/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qvlab/ham_io.hpp"

namespace qvlab {

const char* kind_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::U1Q: return "U1Q";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}

double AngleExpr::value(std::span<const double> params) const {
  if (is_constant()) return offset;
  if (slot >= static_cast<int>(params.size()))
    throw std::invalid_argument("angle references an unbound parameter slot");
  return scale * params[slot] + offset;
}

namespace {

Gate fixed_gate(GateKind k, int q) {
  Gate g;
  g.kind = k;
  g.target = q;
  return g;
}

}  // namespace

Gate Gate::h(int q) { return fixed_gate(GateKind::H, q); }
Gate Gate::x(int q) { return fixed_gate(GateKind::X, q); }
Gate Gate::y(int q) { return fixed_gate(GateKind::Y, q); }
Gate Gate::z(int q) { return fixed_gate(GateKind::Z, q); }

Gate Gate::rx(int q, AngleExpr a) {
  Gate g = fixed_gate(GateKind::RX, q);
  g.angle = a;
  return g;
}

Gate Gate::ry(int q, AngleExpr a) {
  Gate g = fixed_gate(GateKind::RY, q);
  g.angle = a;
  return g;
}

Gate Gate::rz(int q, AngleExpr a) {
  Gate g = fixed_gate(GateKind::RZ, q);
  g.angle = a;
  return g;
}

Gate Gate::u1q(int q, const std::array<cplx, 4>& u) {
  // u u† = I
  const cplx r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
  const cplx r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
  const cplx r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
  if (std::abs(r00 - 1.0) > 1e-10 || std::abs(r11 - 1.0) > 1e-10 ||
      std::abs(r01) > 1e-10)
    throw std::invalid_argument("U1Q matrix is not unitary");
  Gate g = fixed_gate(GateKind::U1Q, q);
  g.unitary = u;
  return g;
}

Gate Gate::cnot(int control, int target) {
  if (control == target)
    throw std::invalid_argument("CNOT control and target must differ");
  Gate g = fixed_gate(GateKind::CNOT, target);
  g.control = control;
  return g;
}

Matrix Gate::matrix2(std::span<const double> params) const {
  Matrix m(2);
  switch (kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      m(0, 0) = s; m(0, 1) = s; m(1, 0) = s; m(1, 1) = -s;
      return m;
    }
    case GateKind::X: m(0, 1) = 1.0; m(1, 0) = 1.0; return m;
    case GateKind::Y:
      m(0, 1) = cplx{0.0, -1.0};
      m(1, 0) = cplx{0.0, 1.0};
      return m;
    case GateKind::Z: m(0, 0) = 1.0; m(1, 1) = -1.0; return m;
    case GateKind::RX: {
      const double t = angle.value(params) / 2.0;
      m(0, 0) = std::cos(t); m(1, 1) = std::cos(t);
      m(0, 1) = cplx{0.0, -std::sin(t)};
      m(1, 0) = cplx{0.0, -std::sin(t)};
      return m;
    }
    case GateKind::RY: {
      const double t = angle.value(params) / 2.0;
      m(0, 0) = std::cos(t); m(1, 1) = std::cos(t);
      m(0, 1) = -std::sin(t); m(1, 0) = std::sin(t);
      return m;
    }
    case GateKind::RZ: {
      const double t = angle.value(params) / 2.0;
      m(0, 0) = std::exp(cplx{0.0, -t});
      m(1, 1) = std::exp(cplx{0.0, t});
      return m;
    }
    case GateKind::U1Q:
      m(0, 0) = unitary[0]; m(0, 1) = unitary[1];
      m(1, 0) = unitary[2]; m(1, 1) = unitary[3];
      return m;
    case GateKind::CNOT:
      throw std::invalid_argument("CNOT has no single-qubit matrix");
  }
  throw std::invalid_argument("unknown gate kind");
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("need at least one qubit");
}

int Circuit::add_slot(std::string name) {
  slot_names_.push_back(std::move(name));
  return n_slots() - 1;
}

void Circuit::append(const Gate& g) {
  if (g.target < 0 || g.target >= n_qubits_)
    throw std::out_of_range("gate target out of range");
  if (g.kind == GateKind::CNOT) {
    if (g.control < 0 || g.control >= n_qubits_)
      throw std::out_of_range("CNOT control out of range");
    if (g.control == g.target)
      throw std::invalid_argument("CNOT control and target must differ");
  }
  if (is_rotation(g.kind) && !g.angle.is_constant() &&
      g.angle.slot >= n_slots())
    throw std::out_of_range("gate references an undeclared parameter slot");
  gates_.push_back(g);
}

std::string Circuit::serialize() const {
  std::ostringstream out;
  for (const Gate& g : gates_) {
    out << kind_name(g.kind) << ' ';
    if (g.kind == GateKind::CNOT) {
      out << g.control << ',' << g.target;
    } else if (g.kind == GateKind::U1Q) {
      out << g.target;
      for (const cplx& v : g.unitary)
        out << ",(" << format_double(v.real()) << ','
            << format_double(v.imag()) << ')';
    } else {
      out << g.target;
      if (is_rotation(g.kind)) {
        out << ',';
        if (g.angle.is_constant()) {
          out << format_double(g.angle.offset);
        } else {
          out << format_double(g.angle.scale) << '*'
              << slot_name(g.angle.slot);
          if (g.angle.offset != 0.0)
            out << '+' << format_double(g.angle.offset);
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

GateCounts gate_counts(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT)
      ++counts.n_cnot;
    else
      ++counts.n_single_qubit;
  }
  return counts;
}

}  // namespace qvlab
