#include <cmath>

#include "doctest.h"
#include "qvlab/ansatz.hpp"
#include "qvlab/density.hpp"
#include "qvlab/ham_io.hpp"
#include "qvlab/oracle.hpp"

using namespace qvlab;

TEST_SUITE("oracle") {

TEST_CASE("molecular spectrum") {
  SpectrumResult s = ground_state(bundled_nah());
  REQUIRE(s.eigenvalues.size() == 16);
  CHECK(s.ground_energy() ==
        doctest::Approx(-160.30347964516537).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(-160.2293398685346).epsilon(1e-11));
  CHECK(s.eigenvalues[2] == doctest::Approx(-160.2293398685346).epsilon(1e-11));
  CHECK(s.eigenvalues.back() ==
        doctest::Approx(-158.01352740000004).epsilon(1e-12));
  CHECK(!s.degenerate);
  CHECK(s.degeneracy == 1);
  REQUIRE(s.ground_space.size() == 1);

  // The ground state lives in the two-particle sector: dominant weight on
  // the reference determinant plus a double-excitation admixture.
  const Vector& g = s.ground_state;
  REQUIRE(g.size() == 16);
  CHECK(std::abs(g[5]) == doctest::Approx(0.998593).epsilon(1e-5));
  CHECK(std::abs(g[10]) == doctest::Approx(0.051491).epsilon(1e-4));
  CHECK(std::abs(g[6]) == doctest::Approx(0.008939).epsilon(1e-3));
  CHECK(std::abs(g[9]) == doctest::Approx(0.008939).epsilon(1e-3));
  // relative signs are physical even though the global phase is not
  CHECK((g[10] / g[5]).real() < 0.0);
  CHECK((g[6] / g[5]).real() > 0.0);
  double rest = 0.0;
  for (std::size_t b = 0; b < g.size(); ++b)
    if (b != 5 && b != 6 && b != 9 && b != 10) rest += std::norm(g[b]);
  CHECK(rest < 1e-12);
}

TEST_CASE("degenerate level reporting") {
  // H = Z0 on two qubits: eigenvalues {-1,-1,+1,+1}, two-fold ground space.
  PauliSum h(2);
  h.add_term(cplx(1, 0), PauliString(2, "ZI"));
  SpectrumResult s = ground_state(h);
  REQUIRE(s.eigenvalues.size() == 4);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(-1.0));
  CHECK(s.eigenvalues[2] == doctest::Approx(1.0));
  CHECK(s.eigenvalues[3] == doctest::Approx(1.0));
  CHECK(s.degenerate);
  CHECK(s.degeneracy == 2);
  CHECK(s.ground_space.size() == 2);

  // |01> (qubit 0 set) has <Z0> = -1, so it lies inside the ground space and
  // the projector fidelity must be 1 even though it need not be parallel to
  // any single reported eigenvector.
  DensityMatrix rho = DensityMatrix::basis_state(2, 1);
  CHECK(ground_space_fidelity(rho, s) == doctest::Approx(1.0).epsilon(1e-12));
  DensityMatrix excited = DensityMatrix::basis_state(2, 0);
  CHECK(ground_space_fidelity(excited, s) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("matrix_exp matches the rotation gate") {
  PauliSum x(1);
  x.add_term(cplx(1, 0), PauliString(1, "X"));
  for (double t : {0.0, 0.3, -1.1, 2.9}) {
    Matrix u = matrix_exp(x, t);
    Matrix rx = Gate::rx(0, AngleExpr::constant(t)).matrix2({});
    CHECK((u - rx).max_abs() < 1e-13);
  }
}

TEST_CASE("matrix_exp_state reproduces the two-level generator action") {
  // G = Y0 X1 X2 X3 couples only |0101> and |1010>:
  // exp(-i (t/2) G)|5> = cos(t/2)|5> - sin(t/2)|10>.
  PauliSum g(4);
  g.add_term(cplx(1, 0), PauliString(4, "YXXX"));
  for (double t : {0.2, -0.7, 1.9}) {
    Vector psi = matrix_exp_state(g, t, 5);
    REQUIRE(psi.size() == 16);
    CHECK(std::abs(psi[5] - cplx(std::cos(t / 2), 0)) < 1e-12);
    CHECK(std::abs(psi[10] - cplx(-std::sin(t / 2), 0)) < 1e-12);
    for (std::size_t b = 0; b < 16; ++b)
      if (b != 5 && b != 10) CHECK(std::abs(psi[b]) < 1e-13);
  }
}

TEST_CASE("statevector path agrees with the noiseless density simulator") {
  Circuit c = build_ansatz(AnsatzSpec::singlet_uccsd());
  std::vector<double> params{0.13, -0.41};

  Vector zero(16, cplx(0, 0));
  zero[0] = cplx(1, 0);
  Vector psi = apply_circuit_state(c, params, zero);
  DensityMatrix rho = run_circuit(c, params, NoiseModel());
  DensityMatrix pure = DensityMatrix::from_statevector(psi);
  CHECK((rho.matrix() - pure.matrix()).max_abs() < 1e-12);

  Matrix u = circuit_unitary(c, params);
  CHECK(u.is_unitary(1e-10));
  Vector via_u = u * zero;
  for (std::size_t b = 0; b < 16; ++b)
    CHECK(std::abs(via_u[b] - psi[b]) < 1e-12);
}

TEST_CASE("single-parameter energy curve value") {
  Circuit c = build_ansatz(AnsatzSpec::uccd());
  DensityMatrix rho = run_circuit(c, std::vector<double>{0.3}, NoiseModel());
  CHECK(expectation(rho, bundled_nah()) ==
        doctest::Approx(-160.287255359666062).epsilon(1e-12));
}

TEST_CASE("energy_scan matches pointwise evaluation") {
  AnsatzSpec spec = AnsatzSpec::uccd();
  PauliSum h = bundled_nah();
  NoiseModel noise = NoiseModel::depolarizing(1e-3);
  SpectrumResult exact = ground_state(h);

  std::vector<std::vector<double>> grid;
  for (double t : theta_grid(-0.5, 0.5, 11)) grid.push_back({t});
  std::vector<ScanPoint> scan = energy_scan(spec, h, grid, noise);
  REQUIRE(scan.size() == grid.size());

  Circuit c = build_ansatz(spec);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(scan[i].params == grid[i]);
    DensityMatrix rho = run_circuit(c, grid[i], noise);
    CHECK(scan[i].energy ==
          doctest::Approx(expectation(rho, h)).epsilon(1e-13));
    CHECK(scan[i].fidelity ==
          doctest::Approx(ground_space_fidelity(rho, exact)).epsilon(1e-13));
  }

  CHECK_THROWS_AS(energy_scan(spec, h, {}, noise), std::invalid_argument);
}

TEST_CASE("theta_grid endpoints and spacing") {
  std::vector<double> g = theta_grid(-1.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == doctest::Approx(-1.0));
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK(g[2] == doctest::Approx(0.0));
  CHECK(g[1] == doctest::Approx(-0.5));

  CHECK_THROWS_AS(theta_grid(0.0, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(theta_grid(0.0, 1.0, 0), std::invalid_argument);
}

}  // TEST_SUITE
