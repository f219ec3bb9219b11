#include "qvlab/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "qvlab/hermitian_eig.hpp"

namespace qvlab {

namespace {

constexpr double kDegeneracyTol = 1e-9;

double operator_norm_bound(const PauliSum& h) {
  // sum |c| bounds the spectral norm; cheap and good enough for residuals.
  double s = 0.0;
  for (int i = 0; i < h.size(); ++i) s += std::abs(h.coeff(i));
  return s;
}

}  // namespace

SpectrumResult ground_state(const PauliSum& h) {
  if (!h.is_hermitian())
    throw std::invalid_argument("ground_state requires a Hermitian operator");
  const Matrix m = h.to_matrix();
  const EigResult eig = eigh(m);

  SpectrumResult res;
  res.eigenvalues = eig.eigenvalues;
  const int dim = m.dim();
  res.ground_state.resize(dim);
  for (int r = 0; r < dim; ++r) res.ground_state[r] = eig.vectors(r, 0);
  normalize(res.ground_state);

  res.degeneracy = 1;
  while (res.degeneracy < dim &&
         eig.eigenvalues[res.degeneracy] - eig.eigenvalues[0] < kDegeneracyTol)
    ++res.degeneracy;
  res.degenerate = res.degeneracy > 1;
  for (int k = 0; k < res.degeneracy; ++k) {
    Vector v(dim);
    for (int r = 0; r < dim; ++r) v[r] = eig.vectors(r, k);
    normalize(v);
    res.ground_space.push_back(std::move(v));
  }

  // Residual guard on the reported ground vector.
  const Vector hv = m * res.ground_state;
  double resid2 = 0.0;
  for (int r = 0; r < dim; ++r)
    resid2 += std::norm(hv[r] - res.eigenvalues[0] * res.ground_state[r]);
  if (std::sqrt(resid2) > 1e-10 * std::max(1.0, operator_norm_bound(h)))
    throw std::runtime_error("eigendecomposition residual too large");
  return res;
}

double ground_space_fidelity(const DensityMatrix& rho,
                             const SpectrumResult& spectrum) {
  double f = 0.0;
  for (const Vector& v : spectrum.ground_space) f += fidelity(rho, v);
  return f;
}

Matrix matrix_exp(const PauliSum& hermitian, double angle) {
  if (!hermitian.is_hermitian())
    throw std::invalid_argument("matrix_exp requires a Hermitian generator");
  const Matrix m = hermitian.to_matrix();
  const EigResult eig = eigh(m);
  const int dim = m.dim();
  // exp(-i (angle/2) G) = V exp(-i (angle/2) diag) V†
  Matrix out(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      cplx acc = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double t = -0.5 * angle * eig.eigenvalues[k];
        acc += eig.vectors(r, k) * cplx{std::cos(t), std::sin(t)} *
               std::conj(eig.vectors(c, k));
      }
      out(r, c) = acc;
    }
  return out;
}

Vector matrix_exp_state(const PauliSum& hermitian, double angle,
                        std::uint64_t reference) {
  const Matrix u = matrix_exp(hermitian, angle);
  if (reference >= static_cast<std::uint64_t>(u.dim()))
    throw std::out_of_range("reference index outside the register");
  Vector psi(u.dim(), cplx{0.0, 0.0});
  for (int r = 0; r < u.dim(); ++r) psi[r] = u(r, static_cast<int>(reference));
  return psi;
}

Vector apply_circuit_state(const Circuit& c, std::span<const double> params,
                           Vector psi) {
  if (psi.size() != (std::size_t{1} << c.n_qubits()))
    throw std::invalid_argument("state does not fit the register");
  if (static_cast<int>(params.size()) != c.n_slots())
    throw std::invalid_argument("parameter count does not match circuit slots");
  const std::size_t dim = psi.size();
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      const std::size_t cb = std::size_t{1} << g.control;
      const std::size_t tb = std::size_t{1} << g.target;
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
      continue;
    }
    const Matrix u = g.matrix2(params);
    const std::size_t m = std::size_t{1} << g.target;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & m) continue;
      const cplx a = psi[i];
      const cplx b = psi[i | m];
      psi[i] = u(0, 0) * a + u(0, 1) * b;
      psi[i | m] = u(1, 0) * a + u(1, 1) * b;
    }
  }
  return psi;
}

Matrix circuit_unitary(const Circuit& c, std::span<const double> params) {
  const int dim = 1 << c.n_qubits();
  Matrix u(dim);
  for (int col = 0; col < dim; ++col) {
    Vector basis(dim, cplx{0.0, 0.0});
    basis[col] = 1.0;
    const Vector out = apply_circuit_state(c, params, std::move(basis));
    for (int r = 0; r < dim; ++r) u(r, col) = out[r];
  }
  return u;
}

std::vector<ScanPoint> energy_scan(const AnsatzSpec& ansatz, const PauliSum& h,
                                   std::span<const std::vector<double>> grid,
                                   const NoiseModel& noise) {
  if (grid.empty()) throw std::invalid_argument("energy_scan needs a grid");
  const Circuit c = build_ansatz(ansatz);
  const SpectrumResult spectrum = ground_state(h);
  std::vector<ScanPoint> table(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(grid.size());
       ++i) {
    const std::vector<double>& params = grid[i];
    const DensityMatrix rho = run_circuit(c, params, noise);
    table[i] = {params, expectation(rho, h),
                ground_space_fidelity(rho, spectrum)};
  }
  return table;
}

std::vector<double> theta_grid(double lo, double hi, int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return g;
}

}  // namespace qvlab
