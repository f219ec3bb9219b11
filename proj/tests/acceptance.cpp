// End-to-end acceptance gate. Each numbered check prints one [PASS]/[FAIL]
// line; the process exits non-zero if any check fails. Tolerances are pinned
// here on purpose: loosening them is a visible diff.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qvlab/ansatz.hpp"
#include "qvlab/cli.hpp"
#include "qvlab/density.hpp"
#include "qvlab/fermion.hpp"
#include "qvlab/ham_io.hpp"
#include "qvlab/hermitian_eig.hpp"
#include "qvlab/oracle.hpp"
#include "qvlab/randomized_compiling.hpp"
#include "qvlab/vqe.hpp"

using namespace qvlab;

namespace {

int g_failures = 0;

// Every CSV table produced while the gate runs, audited at the end for the
// variational bound. Run tables carry p1/status columns; noiseless adaptive
// traces are tagged by the bool.
std::vector<std::string> g_run_tables;
std::vector<std::string> g_noiseless_traces;

void report(int index, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d. %s%s%s\n", ok ? "PASS" : "FAIL", index, name,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(line);
  while (std::getline(in, tok, sep)) out.push_back(tok);
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// exp(theta * G) for an anti-Hermitian generator, through the dense
// eigendecomposition oracle (matrix_exp computes exp(-i (angle/2) H)).
Matrix dense_exp_generator(const PauliSum& anti_hermitian, double theta) {
  PauliSum h = cplx(0, -1) * anti_hermitian;
  return matrix_exp(h, -2.0 * theta);
}

// --- 1: canonical anticommutation survives the qubit mapping ---------------

void check_anticommutation() {
  const int n = 4;
  const double tol = 1e-12;
  double worst = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Matrix a = jordan_wigner(FermionOp::annihilation(p), n).to_matrix();
      Matrix c = jordan_wigner(FermionOp::creation(q), n).to_matrix();
      Matrix anti = a * c + c * a;
      if (p == q) anti -= Matrix::identity(1 << n);
      worst = std::max(worst, anti.max_abs());
    }
  report(1, "fermionic anticommutation under the qubit mapping", worst <= tol,
         "max residual " + format_double(worst));
}

// --- 2: compiled circuits match dense exponentials -------------------------

void check_compiler() {
  const double tol = 1e-10;
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  double worst = 0.0;

  // every generator reachable from the ansatz builders and the pool
  std::vector<PauliSum> gens;
  for (const PoolOp& op : build_pool(2, 2)) gens.push_back(op.generator);
  gens.push_back(singles_generator_4q());
  gens.push_back(doubles_generator_4q());

  for (int rep = 0; rep < 20; ++rep) {
    const double t = angle(rng);

    for (const PauliSum& g : gens) {
      Circuit c(4);
      c.add_slot("theta0");
      append_generator(c, g, 0);
      Matrix u = circuit_unitary(c, std::vector<double>{t});
      worst = std::max(worst, (u - dense_exp_generator(g, t)).max_abs());
    }

    // full single-parameter ansatz: reference prep then one rotation block
    {
      Circuit c = build_ansatz(AnsatzSpec::uccd());
      Matrix u = circuit_unitary(c, std::vector<double>{t});
      PauliSum word(4);
      word.add_term(cplx(1, 0), PauliString(4, "YXXX"));
      Matrix prep = circuit_unitary(build_reference(4, std::vector<int>{0, 2}),
                                    {});
      Matrix dense = matrix_exp(word, t) * prep;
      worst = std::max(worst, (u - dense).max_abs());
    }

    // full two-parameter ansatz: singles block then doubles block
    {
      const double t2 = angle(rng);
      Circuit c = build_ansatz(AnsatzSpec::singlet_uccsd());
      Matrix u = circuit_unitary(c, std::vector<double>{t, t2});
      Matrix prep = circuit_unitary(build_reference(4, std::vector<int>{0, 2}),
                                    {});
      Matrix dense = dense_exp_generator(doubles_generator_4q(), t2) *
                     (dense_exp_generator(singles_generator_4q(), t) * prep);
      worst = std::max(worst, (u - dense).max_abs());
    }
  }
  report(2, "compiled circuits match dense exponentials", worst <= tol,
         "max deviation " + format_double(worst) + " over 20 angles");
}

// --- 3: analytic expectation column of the doubles ansatz ------------------

void check_expectation_column() {
  const double tol = 1e-8;
  // Closed-form <P_j(theta)> for the two-determinant ansatz state
  // cos(theta/2)|0101> - sin(theta/2)|1010>, one entry per Hamiltonian word.
  // The I0 Z1 I2 I3 entry is +cos(theta); the sign follows from the
  // occupation pattern (qubit 1 empty in the reference determinant), and is
  // consistent with the Z0Z1, IZZI and IZIZ entries.
  enum Kind { kOne, kZero, kMinusSin, kMinusCos, kPlusCos, kMinusOne };
  const std::pair<const char*, Kind> column[] = {
      {"IIII", kOne},      {"XXII", kZero},     {"XXXX", kMinusSin},
      {"XXYY", kMinusSin}, {"XXZI", kZero},     {"XXIZ", kZero},
      {"IIXX", kZero},     {"YYII", kZero},     {"YYXX", kMinusSin},
      {"YYYY", kMinusSin}, {"YYZI", kZero},     {"YYIZ", kZero},
      {"IIYY", kZero},     {"ZIII", kMinusCos}, {"ZIXX", kZero},
      {"ZIYY", kZero},     {"ZZII", kMinusOne}, {"ZIZI", kOne},
      {"ZIIZ", kMinusOne}, {"IZII", kPlusCos},  {"IZXX", kZero},
      {"IZYY", kZero},     {"IZZI", kMinusOne}, {"IZIZ", kOne},
      {"IIZI", kMinusCos}, {"IIZZ", kMinusOne}, {"IIIZ", kPlusCos},
  };

  const Circuit circuit = build_ansatz(AnsatzSpec::uccd());
  double worst = 0.0;
  for (double theta : theta_grid(-2.8, 2.8, 8)) {
    DensityMatrix rho =
        run_circuit(circuit, std::vector<double>{theta}, NoiseModel());
    for (const auto& [word, kind] : column) {
      PauliSum p(4);
      p.add_term(cplx(1, 0), PauliString(4, word));
      double want = 0.0;
      switch (kind) {
        case kOne: want = 1.0; break;
        case kZero: want = 0.0; break;
        case kMinusSin: want = -std::sin(theta); break;
        case kMinusCos: want = -std::cos(theta); break;
        case kPlusCos: want = std::cos(theta); break;
        case kMinusOne: want = -1.0; break;
      }
      worst = std::max(worst, std::abs(expectation(rho, p) - want));
    }
  }
  report(3, "analytic expectations of the doubles ansatz", worst <= tol,
         "max deviation " + format_double(worst) + " over 8 angles, 27 words");
}

// --- 4: noiseless runs recover the ideal answers ---------------------------

double two_determinant_subspace_minimum(const PauliSum& h) {
  const Matrix dense = h.to_matrix();
  Matrix block(2);
  const int idx[2] = {5, 10};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) block(r, c) = dense(idx[r], idx[c]);
  return eigh(block).eigenvalues.front();
}

void check_noiseless_recovery(double exact_e0) {
  const double subspace_min = two_determinant_subspace_minimum(bundled_nah());

  std::vector<RunRecord> rows = cmd_vqe(VqeCliOptions{});
  g_run_tables.push_back(records_to_csv(rows));
  const RunRecord& uccd = rows.front();
  bool uccd_ok = uccd.fidelity >= 0.99 &&
                 std::abs(uccd.energy - subspace_min) <= 1e-6;

  AdaptCliOutput adapt = cmd_adapt(AdaptCliOptions{});  // default threshold
  g_run_tables.push_back(records_to_csv({adapt.summary}));
  g_noiseless_traces.push_back(adapt.trace_csv);
  bool adapt_ok = std::abs(adapt.summary.energy - exact_e0) <= 1.6e-3 &&
                  adapt.summary.fidelity >= 0.99;

  report(4, "noiseless recovery of the ideal energy and state",
         uccd_ok && adapt_ok,
         "uccd gap to subspace optimum " +
             format_double(std::abs(uccd.energy - subspace_min)) +
             ", adaptive gap to E0 " +
             format_double(std::abs(adapt.summary.energy - exact_e0)));
}

// --- 5: noise moves energies and fidelities monotonically ------------------

void check_noise_monotonicity() {
  const double grid[] = {0.0, 1e-4, 1e-3, 1e-2};
  bool ok = true;
  std::string detail;
  std::vector<double> uccd_error, uccsd_error;

  for (AnsatzFamily family :
       {AnsatzFamily::Uccd, AnsatzFamily::SingletUccsd}) {
    std::vector<RunRecord> sequence;
    for (double p1 : grid) {
      VqeCliOptions opt;
      opt.family = family;
      opt.p1 = p1;
      std::vector<RunRecord> rows = cmd_vqe(opt);
      g_run_tables.push_back(records_to_csv(rows));
      sequence.push_back(rows.front());
      (family == AnsatzFamily::Uccd ? uccd_error : uccsd_error)
          .push_back(rows.front().energy_error);
    }
    for (std::size_t i = 1; i < sequence.size(); ++i) {
      if (!(sequence[i].energy > sequence[i - 1].energy)) {
        ok = false;
        detail = std::string(family_name(family)) + " energy not increasing";
      }
      if (!(sequence[i].fidelity < sequence[i - 1].fidelity)) {
        ok = false;
        detail = std::string(family_name(family)) + " fidelity not decreasing";
      }
    }
  }
  for (std::size_t i = 1; i < 4; ++i)  // shared p1 > 0
    if (!(uccsd_error[i] >= uccd_error[i])) {
      ok = false;
      detail = "deeper ansatz beats the shallow one at p1 = " +
               format_double(grid[i]);
    }
  report(5, "depolarizing noise shifts results monotonically", ok, detail);
}

// --- 6: randomized compiling equivalence and gate inflation ----------------

void check_randomized_compiling() {
  const Circuit bare = build_ansatz(AnsatzSpec::uccd());
  const GateCounts bare_counts = gate_counts(bare);
  const std::vector<double> theta{0.25};

  Vector zero(16, cplx(0, 0));
  zero[0] = cplx(1, 0);
  const Vector psi_bare = apply_circuit_state(bare, theta, zero);

  bool equivalent = true;
  bool cnot_fixed = true;
  double inflation_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Circuit rc = randomized_compile(bare, seed);
    GateCounts counts = gate_counts(rc);
    cnot_fixed = cnot_fixed && counts.n_cnot == bare_counts.n_cnot;
    inflation_sum +=
        static_cast<double>(counts.n_single_qubit - bare_counts.n_single_qubit) /
        bare_counts.n_single_qubit;
    Vector psi_rc = apply_circuit_state(rc, theta, zero);
    double f = std::norm(inner(psi_bare, psi_rc));
    equivalent = equivalent && f >= 1.0 - 1e-10;
  }
  const double mean_inflation = inflation_sum / 10.0;
  const bool inflation_ok = mean_inflation >= 0.30 && mean_inflation <= 0.70;

  // under noise the twirled circuits pay for the extra frame gates
  VqeCliOptions bare_opt;
  bare_opt.p1 = 0.01;
  std::vector<RunRecord> bare_rows = cmd_vqe(bare_opt);
  g_run_tables.push_back(records_to_csv(bare_rows));
  VqeCliOptions rc_opt = bare_opt;
  rc_opt.rc = 10;
  std::vector<RunRecord> rc_rows = cmd_vqe(rc_opt);
  g_run_tables.push_back(records_to_csv(rc_rows));
  const bool noisier = rc_rows.front().energy >= bare_rows.front().energy;

  report(6, "randomized compiling equivalence and inflation",
         equivalent && cnot_fixed && inflation_ok && noisier,
         "mean 1q inflation " + format_double(mean_inflation * 100) +
             "%, mean noisy energy shift " +
             format_double(rc_rows.front().energy - bare_rows.front().energy));
}

// --- 7: the noisy gate map is CPTP ------------------------------------------

void check_cptp() {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> qubits(2, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);

  double worst_trace = 0.0, worst_herm = 0.0, worst_eig = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = qubits(rng);
    const int dim = 1 << n;

    // random full-rank density matrix rho = A A^dag / tr
    Matrix a(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        a(r, c) = cplx(2 * unit(rng) - 1, 2 * unit(rng) - 1);
    Matrix rho_m = a * a.adjoint();
    rho_m *= cplx(1.0 / rho_m.trace().real(), 0);
    DensityMatrix rho(n);
    rho.matrix() = rho_m;

    const int q = static_cast<int>(rng() % n);
    Gate g;
    switch (rng() % 8) {
      case 0: g = Gate::h(q); break;
      case 1: g = Gate::x(q); break;
      case 2: g = Gate::y(q); break;
      case 3: g = Gate::z(q); break;
      case 4: g = Gate::rx(q, AngleExpr::constant(angle(rng))); break;
      case 5: g = Gate::ry(q, AngleExpr::constant(angle(rng))); break;
      case 6: g = Gate::rz(q, AngleExpr::constant(angle(rng))); break;
      default: {
        int c = static_cast<int>(rng() % n);
        if (c == q) c = (c + 1) % n;
        g = Gate::cnot(c, q);
        break;
      }
    }
    NoiseModel noise = NoiseModel::depolarizing(0.1 * unit(rng), false);

    DensityMatrix out = apply_gate(rho, g, {}, noise);
    worst_trace = std::max(worst_trace, std::abs(out.trace_real() - 1.0));
    worst_herm =
        std::max(worst_herm, (out.matrix() - out.matrix().adjoint()).max_abs());
    EigResult eig = eigh(out.matrix(), 1e-9);
    worst_eig = std::min(worst_eig, eig.eigenvalues.front());
  }
  const bool ok =
      worst_trace <= 1e-12 && worst_herm <= 1e-12 && worst_eig >= -1e-10;
  report(7, "noisy gate map preserves density-matrix structure", ok,
         "trace " + format_double(worst_trace) + ", hermiticity " +
             format_double(worst_herm) + ", min eigenvalue " +
             format_double(worst_eig) + " over 1000 trials");
}

// --- 8: the two optimizers find the same minimum ----------------------------

void check_optimizer_parity() {
  VqeCliOptions gf_opt;
  std::vector<RunRecord> gf = cmd_vqe(gf_opt);
  g_run_tables.push_back(records_to_csv(gf));

  VqeCliOptions qn_opt;
  qn_opt.optimizer = OptimizerKind::QuasiNewton;
  std::vector<RunRecord> qn = cmd_vqe(qn_opt);
  g_run_tables.push_back(records_to_csv(qn));

  std::vector<std::vector<double>> grid;
  for (double t : theta_grid(-std::numbers::pi, std::numbers::pi, 629))
    grid.push_back({t});
  std::vector<ScanPoint> scan =
      energy_scan(AnsatzSpec::uccd(), bundled_nah(), grid, NoiseModel());
  double scan_min = scan.front().energy;
  for (const ScanPoint& p : scan) scan_min = std::min(scan_min, p.energy);

  const double agree = std::abs(gf.front().energy - qn.front().energy);
  const double gf_gap = std::abs(gf.front().energy - scan_min);
  const double qn_gap = std::abs(qn.front().energy - scan_min);
  const bool ok = agree <= 1e-5 && gf_gap <= 1e-6 && qn_gap <= 1e-6;
  report(8, "gradient-free and quasi-newton parity", ok,
         "disagreement " + format_double(agree) + ", scan gaps " +
             format_double(gf_gap) + " / " + format_double(qn_gap));
}

// --- 9: adaptive growth structure -------------------------------------------

void check_adapt_structure() {
  AdaptCliOptions quiet;
  quiet.grad_threshold = 1e-3;
  AdaptCliOutput noiseless = cmd_adapt(quiet);
  g_run_tables.push_back(records_to_csv({noiseless.summary}));
  g_noiseless_traces.push_back(noiseless.trace_csv);

  AdaptCliOptions noisy = quiet;
  noisy.p1 = 0.01;
  AdaptCliOutput degraded = cmd_adapt(noisy);

  bool count_ok =
      degraded.summary.n_params >= noiseless.summary.n_params;

  bool monotone = true;
  const auto& its = noiseless.result.iterations;
  for (std::size_t i = 1; i < its.size(); ++i)
    if (its[i].energy > its[i - 1].energy + 1e-12) monotone = false;

  bool argmax_ok = true;
  for (const AdaptResult* r : {&noiseless.result, &degraded.result})
    for (const AdaptIteration& it : r->iterations) {
      double best = 0.0;
      for (double g : it.gradients) best = std::max(best, std::abs(g));
      if (std::abs(it.gradients[it.selected]) != best) argmax_ok = false;
    }

  report(9, "adaptive ansatz growth structure",
         count_ok && monotone && argmax_ok,
         "noisy picks " + std::to_string(degraded.summary.n_params) +
             " operators, noiseless " +
             std::to_string(noiseless.summary.n_params));
}

// --- 10: no noiseless energy dips below the exact ground energy -------------

void check_variational_bound(double exact_e0) {
  const double floor = exact_e0 - 1e-9;
  int audited = 0;
  double lowest = 0.0;
  bool ok = true;

  for (const std::string& table : g_run_tables) {
    std::vector<std::string> rows = lines_of(table);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      std::vector<std::string> cols = split(rows[i], ',');
      if (cols.size() < 16) continue;
      if (cols[1] != "0" || cols[5] != "ok") continue;
      const double energy = std::stod(cols[6]);
      ++audited;
      lowest = audited == 1 ? energy : std::min(lowest, energy);
      if (energy < floor) ok = false;
    }
  }
  for (const std::string& trace : g_noiseless_traces) {
    std::vector<std::string> rows = lines_of(trace);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      std::vector<std::string> cols = split(rows[i], ',');
      if (cols.size() < 6) continue;
      const double energy = std::stod(cols[4]);
      ++audited;
      lowest = std::min(lowest, energy);
      if (energy < floor) ok = false;
    }
  }

  report(10, "variational bound across all emitted noiseless energies",
         ok && audited > 0,
         std::to_string(audited) + " energies audited, lowest " +
             format_double(lowest) + " vs floor " + format_double(floor));
}

}  // namespace

int main() {
  const double exact_e0 = ground_state(bundled_nah()).ground_energy();

  check_anticommutation();
  check_compiler();
  check_expectation_column();
  check_noiseless_recovery(exact_e0);
  check_noise_monotonicity();
  check_randomized_compiling();
  check_cptp();
  check_optimizer_parity();
  check_adapt_structure();
  check_variational_bound(exact_e0);

  if (g_failures > 0) {
    std::printf("%d of 10 checks failed\n", g_failures);
    return 1;
  }
  std::printf("all 10 checks passed\n");
  return 0;
}
