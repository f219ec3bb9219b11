#include <algorithm>
#include <vector>

#include "qvlab/kernels.hpp"

// Reference implementations. Kept deliberately plain so they can stand in as
// the ground truth for the parallel kernels in tests and benchmarks.

namespace qvlab::kernels::serial {

void apply_1q(cplx* rho, int n_qubits, int qubit,
              const std::array<cplx, 4>& u) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t m = std::size_t{1} << qubit;
  // rho <- U rho
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & m) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      const cplx a = rho[r * dim + c];
      const cplx b = rho[(r | m) * dim + c];
      rho[r * dim + c] = u[0] * a + u[1] * b;
      rho[(r | m) * dim + c] = u[2] * a + u[3] * b;
    }
  }
  // rho <- rho U†
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (c & m) continue;
      const cplx a = rho[r * dim + c];
      const cplx b = rho[r * dim + (c | m)];
      rho[r * dim + c] = a * std::conj(u[0]) + b * std::conj(u[1]);
      rho[r * dim + (c | m)] = a * std::conj(u[2]) + b * std::conj(u[3]);
    }
  }
}

void apply_cnot(cplx* rho, int n_qubits, int control, int target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t r = 0; r < dim; ++r) {
    if ((r & cb) && !(r & tb))
      for (std::size_t c = 0; c < dim; ++c)
        std::swap(rho[r * dim + c], rho[(r | tb) * dim + c]);
  }
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if ((c & cb) && !(c & tb))
        std::swap(rho[r * dim + c], rho[r * dim + (c | tb)]);
}

void depolarize(cplx* rho, int n_qubits, int qubit, double p) {
  // Literal (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z).
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t m = std::size_t{1} << qubit;
  const std::vector<cplx> orig(rho, rho + dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const bool same = ((r & m) != 0) == ((c & m) != 0);
      const cplx x = orig[(r ^ m) * dim + (c ^ m)];
      const cplx y = same ? x : -x;
      const cplx z = same ? orig[r * dim + c] : -orig[r * dim + c];
      rho[r * dim + c] =
          (1.0 - p) * orig[r * dim + c] + (p / 3.0) * (x + y + z);
    }
}

cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p) {
  // P has one nonzero per column: row c ^ xmask, entry w(c). Tr(rho P) then
  // reads one element of rho per column.
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::size_t xmask = 0;
  for (int q = 0; q < n_qubits; ++q)
    if (p.letter(q) == Pauli::X || p.letter(q) == Pauli::Y)
      xmask |= std::size_t{1} << q;
  cplx acc = 0.0;
  for (std::size_t c = 0; c < dim; ++c) {
    cplx w = p.phase();
    for (int q = 0; q < n_qubits; ++q) {
      const bool bit = (c >> q) & 1;
      switch (p.letter(q)) {
        case Pauli::Y: w *= bit ? cplx{0.0, -1.0} : cplx{0.0, 1.0}; break;
        case Pauli::Z: if (bit) w = -w; break;
        default: break;
      }
    }
    acc += w * rho[c * dim + (c ^ xmask)];
  }
  return acc;
}

double sum_abs2(const cplx* a, std::size_t count) {
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) s += std::norm(a[i]);
  return s;
}

void matmul(const cplx* a, const cplx* b, cplx* out, int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  std::fill(out, out + d * d, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const cplx f = a[i * d + k];
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += f * b[k * d + j];
    }
}

}  // namespace qvlab::kernels::serial
