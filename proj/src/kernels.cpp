#include "qvlab/kernels.hpp"

namespace qvlab::kernels {

namespace {

Backend g_backend = Backend::automatic;

// Below ~4096 touched elements the OpenMP fork/join overhead dominates, so
// automatic mode stays serial for small registers.
constexpr std::size_t kParallelThreshold = 4096;

bool use_parallel(std::size_t work) {
  switch (g_backend) {
    case Backend::serial: return false;
    case Backend::parallel: return true;
    case Backend::automatic:
      return parallel_available() && work >= kParallelThreshold;
  }
  return false;
}

}  // namespace

void set_backend(Backend b) { g_backend = b; }

Backend configured_backend() { return g_backend; }

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

void apply_1q(cplx* rho, int n_qubits, int qubit,
              const std::array<cplx, 4>& u) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (use_parallel(dim * dim))
    parallel::apply_1q(rho, n_qubits, qubit, u);
  else
    serial::apply_1q(rho, n_qubits, qubit, u);
}

void apply_cnot(cplx* rho, int n_qubits, int control, int target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (use_parallel(dim * dim))
    parallel::apply_cnot(rho, n_qubits, control, target);
  else
    serial::apply_cnot(rho, n_qubits, control, target);
}

void depolarize(cplx* rho, int n_qubits, int qubit, double p) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (use_parallel(dim * dim))
    parallel::depolarize(rho, n_qubits, qubit, p);
  else
    serial::depolarize(rho, n_qubits, qubit, p);
}

cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (use_parallel(dim)) return parallel::pauli_expectation(rho, n_qubits, p);
  return serial::pauli_expectation(rho, n_qubits, p);
}

double sum_abs2(const cplx* a, std::size_t count) {
  if (use_parallel(count)) return parallel::sum_abs2(a, count);
  return serial::sum_abs2(a, count);
}

void matmul(const cplx* a, const cplx* b, cplx* out, int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  if (use_parallel(d * d))
    parallel::matmul(a, b, out, dim);
  else
    serial::matmul(a, b, out, dim);
}

}  // namespace qvlab::kernels
