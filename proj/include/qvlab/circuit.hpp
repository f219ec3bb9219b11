#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qvlab/matrix.hpp"

namespace qvlab {

enum class GateKind : std::uint8_t { H, X, Y, Z, RX, RY, RZ, U1Q, CNOT };

const char* kind_name(GateKind k);
bool is_rotation(GateKind k);

// Affine angle expression scale*theta[slot] + offset; slot -1 is a constant.
struct AngleExpr {
  int slot = -1;
  double scale = 0.0;
  double offset = 0.0;

  static AngleExpr constant(double value) { return {-1, 0.0, value}; }
  static AngleExpr parameter(int slot, double scale = 1.0,
                             double offset = 0.0) {
    return {slot, scale, offset};
  }
  bool is_constant() const { return slot < 0; }
  double value(std::span<const double> params) const;  // throws if unbound
};

struct Gate {
  GateKind kind = GateKind::H;
  int target = 0;
  int control = -1;                // CNOT only
  AngleExpr angle{};               // rotation kinds only
  std::array<cplx, 4> unitary{};   // U1Q only, row-major 2x2

  static Gate h(int q);
  static Gate x(int q);
  static Gate y(int q);
  static Gate z(int q);
  static Gate rx(int q, AngleExpr a);
  static Gate ry(int q, AngleExpr a);
  static Gate rz(int q, AngleExpr a);
  static Gate u1q(int q, const std::array<cplx, 4>& u);  // unitarity checked
  static Gate cnot(int control, int target);

  bool is_parameterized() const {
    return is_rotation(kind) && !angle.is_constant();
  }
  // 2x2 matrix of a single-qubit gate; throws for CNOT.
  Matrix matrix2(std::span<const double> params) const;
};

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  int n_slots() const { return static_cast<int>(slot_names_.size()); }
  int add_slot(std::string name);
  const std::string& slot_name(int slot) const { return slot_names_[slot]; }

  void append(const Gate& g);  // validates qubits and slot references
  const std::vector<Gate>& gates() const { return gates_; }

  // One gate per line: KIND q[,q2][,angle]. Angles print numerically when
  // constant and as scale*name+offset expressions otherwise.
  std::string serialize() const;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
  std::vector<std::string> slot_names_;
};

struct GateCounts {
  int n_single_qubit = 0;
  int n_cnot = 0;
};

GateCounts gate_counts(const Circuit& c);

}  // namespace qvlab
