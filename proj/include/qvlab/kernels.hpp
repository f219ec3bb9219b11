#pragma once

#include <array>
#include <cstddef>

#include "qvlab/matrix.hpp"
#include "qvlab/pauli.hpp"

// Hot-path kernels on raw 2^n x 2^n density matrices (row-major). Every
// kernel has a straightforward serial reference implementation and an
// OpenMP-parallel one; the unqualified entry points dispatch on the active
// backend and the problem size. Parallel reductions accumulate fixed-size
// chunks combined in index order, so results are bit-identical across thread
// counts.

namespace qvlab::kernels {

enum class Backend { automatic, serial, parallel };

void set_backend(Backend b);
Backend configured_backend();
bool parallel_available();

// rho <- U rho U† for a single-qubit unitary u (row-major 2x2) on `qubit`.
void apply_1q(cplx* rho, int n_qubits, int qubit, const std::array<cplx, 4>& u);
// rho <- CNOT rho CNOT.
void apply_cnot(cplx* rho, int n_qubits, int control, int target);
// rho <- (1-p) rho + (p/3) (X rho X + Y rho Y + Z rho Z) on `qubit`.
void depolarize(cplx* rho, int n_qubits, int qubit, double p);
// Tr(rho P), phase included.
cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p);
// sum_ij |rho_ij|^2 (purity for Hermitian rho).
double sum_abs2(const cplx* a, std::size_t count);
// out <- a b, dim x dim row-major. out must not alias a or b.
void matmul(const cplx* a, const cplx* b, cplx* out, int dim);

namespace serial {
void apply_1q(cplx* rho, int n_qubits, int qubit, const std::array<cplx, 4>& u);
void apply_cnot(cplx* rho, int n_qubits, int control, int target);
void depolarize(cplx* rho, int n_qubits, int qubit, double p);
cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p);
double sum_abs2(const cplx* a, std::size_t count);
void matmul(const cplx* a, const cplx* b, cplx* out, int dim);
}  // namespace serial

namespace parallel {
void apply_1q(cplx* rho, int n_qubits, int qubit, const std::array<cplx, 4>& u);
void apply_cnot(cplx* rho, int n_qubits, int control, int target);
void depolarize(cplx* rho, int n_qubits, int qubit, double p);
cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p);
double sum_abs2(const cplx* a, std::size_t count);
void matmul(const cplx* a, const cplx* b, cplx* out, int dim);
}  // namespace parallel

}  // namespace qvlab::kernels
