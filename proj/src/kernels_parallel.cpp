#include <algorithm>
#include <vector>

#include "qvlab/kernels.hpp"

// OpenMP kernels. Reductions accumulate per-chunk partial sums with a fixed
// chunk size and combine them in chunk order, so the floating-point result
// does not depend on the thread count. Without OpenMP these compile to plain
// serial loops.

namespace qvlab::kernels::parallel {

namespace {

constexpr std::size_t kChunk = 4096;

// Expand a compact index to a full basis index with a 0 at bit `qubit`.
inline std::size_t insert_zero_bit(std::size_t i, std::size_t low_mask) {
  return ((i & ~low_mask) << 1) | (i & low_mask);
}

}  // namespace

void apply_1q(cplx* rho, int n_qubits, int qubit,
              const std::array<cplx, 4>& u) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t half = dim >> 1;
  const std::size_t m = std::size_t{1} << qubit;
  const std::size_t low = m - 1;
  const cplx u00c = std::conj(u[0]), u01c = std::conj(u[1]);
  const cplx u10c = std::conj(u[2]), u11c = std::conj(u[3]);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(half); ++ii) {
    const std::size_t r0 = insert_zero_bit(static_cast<std::size_t>(ii), low);
    const std::size_t r1 = r0 | m;
    for (std::size_t jj = 0; jj < half; ++jj) {
      const std::size_t c0 = insert_zero_bit(jj, low);
      const std::size_t c1 = c0 | m;
      const cplx b00 = rho[r0 * dim + c0], b01 = rho[r0 * dim + c1];
      const cplx b10 = rho[r1 * dim + c0], b11 = rho[r1 * dim + c1];
      const cplx t00 = u[0] * b00 + u[1] * b10;
      const cplx t01 = u[0] * b01 + u[1] * b11;
      const cplx t10 = u[2] * b00 + u[3] * b10;
      const cplx t11 = u[2] * b01 + u[3] * b11;
      rho[r0 * dim + c0] = t00 * u00c + t01 * u01c;
      rho[r0 * dim + c1] = t00 * u10c + t01 * u11c;
      rho[r1 * dim + c0] = t10 * u00c + t11 * u01c;
      rho[r1 * dim + c1] = t10 * u10c + t11 * u11c;
    }
  }
}

void apply_cnot(cplx* rho, int n_qubits, int control, int target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(dim); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    if ((r & cb) && !(r & tb))
      for (std::size_t c = 0; c < dim; ++c)
        std::swap(rho[r * dim + c], rho[(r | tb) * dim + c]);
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(dim); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    for (std::size_t c = 0; c < dim; ++c)
      if ((c & cb) && !(c & tb))
        std::swap(rho[r * dim + c], rho[r * dim + (c | tb)]);
  }
}

void depolarize(cplx* rho, int n_qubits, int qubit, double p) {
  // Closed form of (1-p) rho + p/3 sum_sigma sigma rho sigma on one qubit:
  // entries whose row and column bit agree mix with their mirror image,
  //   rho'(r,c) = (1 - 2p/3) rho(r,c) + (2p/3) rho(r^m, c^m),
  // entries whose bits differ only shrink,
  //   rho'(r,c) = (1 - 4p/3) rho(r,c).
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t m = std::size_t{1} << qubit;
  const double keep = 1.0 - 2.0 * p / 3.0;
  const double mix = 2.0 * p / 3.0;
  const double off = 1.0 - 4.0 * p / 3.0;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(dim); ++rr) {
    const std::size_t r = static_cast<std::size_t>(rr);
    const bool rbit = (r & m) != 0;
    for (std::size_t c = 0; c < dim; ++c) {
      const bool cbit = (c & m) != 0;
      if (rbit != cbit) {
        rho[r * dim + c] *= off;
      } else if (!rbit) {
        // Handle the pair once, from its bit-0 member. The mirror element
        // lives on a row no other iteration writes.
        const cplx a = rho[r * dim + c];
        const cplx b = rho[(r | m) * dim + (c | m)];
        rho[r * dim + c] = keep * a + mix * b;
        rho[(r | m) * dim + (c | m)] = mix * a + keep * b;
      }
    }
  }
}

cplx pauli_expectation(const cplx* rho, int n_qubits, const PauliString& p) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::size_t xmask = 0;
  for (int q = 0; q < n_qubits; ++q)
    if (p.letter(q) == Pauli::X || p.letter(q) == Pauli::Y)
      xmask |= std::size_t{1} << q;
  const std::size_t n_chunks = (dim + kChunk - 1) / kChunk;
  std::vector<cplx> partial(n_chunks, cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(n_chunks);
       ++kk) {
    const std::size_t begin = static_cast<std::size_t>(kk) * kChunk;
    const std::size_t end = std::min(dim, begin + kChunk);
    cplx acc = 0.0;
    for (std::size_t c = begin; c < end; ++c) {
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
    partial[static_cast<std::size_t>(kk)] = acc;
  }
  cplx total = 0.0;
  for (const cplx& v : partial) total += v;
  return total;
}

double sum_abs2(const cplx* a, std::size_t count) {
  const std::size_t n_chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> partial(n_chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t kk = 0; kk < static_cast<std::ptrdiff_t>(n_chunks);
       ++kk) {
    const std::size_t begin = static_cast<std::size_t>(kk) * kChunk;
    const std::size_t end = std::min(count, begin + kChunk);
    double acc = 0.0;
    for (std::size_t i = begin; i < end; ++i) acc += std::norm(a[i]);
    partial[static_cast<std::size_t>(kk)] = acc;
  }
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

void matmul(const cplx* a, const cplx* b, cplx* out, int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(d); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    std::fill(out + i * d, out + (i + 1) * d, cplx{0.0, 0.0});
    for (std::size_t k = 0; k < d; ++k) {
      const cplx f = a[i * d + k];
      if (f == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += f * b[k * d + j];
    }
  }
}

}  // namespace qvlab::kernels::parallel
