#include "qvlab/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qvlab/fermion.hpp"

namespace qvlab {

namespace {

FermionOp spin_single(int from, int to) {
  const FermionOp t = FermionOp::creation(to) * FermionOp::annihilation(from);
  return t - t.adjoint();
}

}  // namespace

std::vector<int> reference_occupation(int n_occupied, int n_virtual) {
  const int n_spatial = (n_occupied + n_virtual) / 2;
  std::vector<int> occ;
  for (int i = 0; i < n_occupied / 2; ++i) {
    occ.push_back(i);              // alpha channel
    occ.push_back(n_spatial + i);  // beta channel
  }
  std::sort(occ.begin(), occ.end());
  return occ;
}

std::vector<PoolOp> build_pool(int n_occupied, int n_virtual) {
  if (n_occupied <= 0)
    throw std::invalid_argument("model error: no occupied spin orbitals");
  if (n_virtual <= 0)
    throw std::invalid_argument(
        "model error: no virtual spin orbitals to excite into");
  if (n_occupied % 2 != 0 || n_virtual % 2 != 0)
    throw std::invalid_argument(
        "model error: closed-shell pool needs even spin-orbital counts");

  const int n_qubits = n_occupied + n_virtual;
  const int n_spatial = n_qubits / 2;
  const int occ_sp = n_occupied / 2;

  std::vector<PoolOp> pool;
  // Spin-symmetrized singles, one per (occupied, virtual) spatial pair.
  for (int i = 0; i < occ_sp; ++i)
    for (int a = occ_sp; a < n_spatial; ++a) {
      FermionOp s = spin_single(i, a) + spin_single(n_spatial + i, n_spatial + a);
      s *= 1.0 / std::numbers::sqrt2;
      pool.push_back({"s_" + std::to_string(i) + "_" + std::to_string(a),
                      jordan_wigner(s, n_qubits)});
    }
  // Pair doubles: both electrons of a spatial orbital hop together.
  for (int i = 0; i < occ_sp; ++i)
    for (int a = occ_sp; a < n_spatial; ++a) {
      const FermionOp t = FermionOp::creation(a) *
                          FermionOp::creation(n_spatial + a) *
                          FermionOp::annihilation(n_spatial + i) *
                          FermionOp::annihilation(i);
      const FermionOp d = t - t.adjoint();
      pool.push_back({"d_" + std::to_string(i) + "_" + std::to_string(a),
                      jordan_wigner(d, n_qubits)});
    }

  if (pool.empty()) throw std::invalid_argument("model error: empty pool");
  for (const PoolOp& op : pool)
    if (!op.generator.is_anti_hermitian(1e-12))
      throw std::logic_error("pool generator is not anti-Hermitian");
  return pool;
}

std::vector<double> pool_gradients(const DensityMatrix& rho, const PauliSum& h,
                                   std::span<const PoolOp> pool) {
  std::vector<double> g;
  g.reserve(pool.size());
  for (const PoolOp& op : pool)
    g.push_back(expectation(rho, commutator(h, op.generator)));
  return g;
}

namespace {

VqeResult assemble_result(const PauliSum& h, const Circuit& circuit,
                          const NoiseModel& noise, const SpectrumResult& exact,
                          const OptimizeResult& opt, OptimizerKind kind) {
  const DensityMatrix rho = run_circuit(circuit, opt.params, noise);
  VqeResult res;
  res.energy = expectation(rho, h);
  res.exact_e0 = exact.ground_energy();
  res.energy_error = res.energy - res.exact_e0;
  res.fidelity = ground_space_fidelity(rho, exact);
  res.parameters = opt.params;
  res.gates = gate_counts(circuit);
  res.evaluations = opt.evaluations;
  res.iterations = opt.iterations;
  res.converged = opt.converged;
  res.optimizer = kind;
  res.noise_p1 = noise.p1;
  res.per_term_expectations = per_term_expectations(rho, h);
  return res;
}

}  // namespace

VqeResult run_vqe_circuit(const PauliSum& h, const Circuit& circuit,
                          const NoiseModel& noise,
                          const OptimizerConfig& cfg) {
  if (h.n_qubits() != circuit.n_qubits())
    throw std::invalid_argument("Hamiltonian does not fit the circuit");
  const SpectrumResult exact = ground_state(h);
  Objective obj;
  obj.arity = circuit.n_slots();
  obj.fn = [&](std::span<const double> x) {
    return expectation(run_circuit(circuit, x, noise), h);
  };
  const OptimizeResult opt = minimize(obj, cfg);
  return assemble_result(h, circuit, noise, exact, opt, cfg.kind);
}

VqeResult run_vqe(const PauliSum& h, const AnsatzSpec& spec,
                  const NoiseModel& noise, const OptimizerConfig& cfg) {
  return run_vqe_circuit(h, build_ansatz(spec), noise, cfg);
}

AdaptResult run_adapt(const PauliSum& h, const NoiseModel& noise,
                      const OptimizerConfig& cfg, const AdaptOptions& opts) {
  if (opts.grad_threshold <= 0.0)
    throw std::invalid_argument("gradient threshold must be positive");
  if (opts.max_depth < 1)
    throw std::invalid_argument("max depth must be at least 1");

  const int n_qubits = h.n_qubits();
  int n_occ = opts.n_occupied;
  int n_virt = opts.n_virtual;
  if (n_occ < 0) n_occ = n_qubits / 2;
  if (n_virt < 0) n_virt = n_qubits - n_occ;
  if (n_occ + n_virt != n_qubits)
    throw std::invalid_argument("orbital counts do not fit the register");

  const std::vector<PoolOp> pool = build_pool(n_occ, n_virt);
  const std::vector<int> occupation = reference_occupation(n_occ, n_virt);
  const SpectrumResult exact = ground_state(h);
  const NoiseModel grad_noise =
      opts.noiseless_gradients ? NoiseModel{} : noise;

  AdaptResult result;
  std::vector<PauliSum> generators;
  std::vector<double> params;
  long total_evaluations = 0;
  OptimizeResult last_opt;
  last_opt.converged = true;

  for (;;) {
    const AnsatzSpec spec =
        AnsatzSpec::adapt(n_qubits, occupation, generators);
    const Circuit circuit = build_ansatz(spec);

    const DensityMatrix rho_grad = run_circuit(circuit, params, grad_noise);
    const std::vector<double> grads = pool_gradients(rho_grad, h, pool);
    double norm;
    if (opts.use_inf_norm) {
      norm = 0.0;
      for (double g : grads) norm = std::max(norm, std::abs(g));
    } else {
      norm = 0.0;
      for (double g : grads) norm += g * g;
      norm = std::sqrt(norm);
    }

    if (norm < opts.grad_threshold) {
      result.converged = true;
      break;
    }
    if (static_cast<int>(generators.size()) >= opts.max_depth) {
      result.converged = false;
      break;
    }

    int selected = 0;
    for (std::size_t k = 1; k < grads.size(); ++k)
      if (std::abs(grads[k]) > std::abs(grads[selected]))
        selected = static_cast<int>(k);

    generators.push_back(pool[selected].generator);
    params.push_back(0.0);

    const AnsatzSpec grown =
        AnsatzSpec::adapt(n_qubits, occupation, generators);
    const Circuit grown_circuit = build_ansatz(grown);
    Objective obj;
    obj.arity = grown_circuit.n_slots();
    obj.fn = [&](std::span<const double> x) {
      return expectation(run_circuit(grown_circuit, x, noise), h);
    };
    OptimizerConfig warm = cfg;
    warm.initial_point = params;
    last_opt = minimize(obj, warm);
    params = last_opt.params;
    total_evaluations += last_opt.evaluations;

    const DensityMatrix rho_opt = run_circuit(grown_circuit, params, noise);
    AdaptIteration it;
    it.selected = selected;
    it.selected_id = pool[selected].id;
    it.grad_norm = norm;
    it.gradients = grads;
    it.params = params;
    it.energy = expectation(rho_opt, h);
    it.fidelity = ground_space_fidelity(rho_opt, exact);
    it.evaluations = last_opt.evaluations;
    result.iterations.push_back(std::move(it));
  }

  const AnsatzSpec final_spec =
      AnsatzSpec::adapt(n_qubits, occupation, generators);
  const Circuit final_circuit = build_ansatz(final_spec);
  OptimizeResult summary;
  summary.params = params;
  summary.evaluations = total_evaluations;
  summary.iterations = static_cast<int>(result.iterations.size());
  summary.converged = generators.empty() ? true : last_opt.converged;
  result.final_result = assemble_result(h, final_circuit, noise, exact,
                                        summary, cfg.kind);
  // The driver's convergence (gradient norm under threshold) is the
  // reportable flag, not the inner optimizer's.
  result.final_result.converged = result.converged;
  return result;
}

}  // namespace qvlab
