#include "qvlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"

#include "qvlab/ansatz.hpp"
#include "qvlab/density.hpp"
#include "qvlab/randomized_compiling.hpp"

namespace qvlab {

namespace {

std::string csv_field(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

std::string join_values(std::span<const double> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("short write: " + path);
}

NoiseModel make_noise(double p1, bool noisy_diagonal) {
  try {
    return NoiseModel::depolarizing(p1, !noisy_diagonal);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

HamiltonianFile resolve_hamiltonian(const std::string& path, bool bundled) {
  if (bundled || path.empty()) return bundled_nah_file();
  return load_hamiltonian(path);
}

AnsatzSpec spec_for(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::Uccd:
      return AnsatzSpec::uccd();
    case AnsatzFamily::SingletUccsd:
      return AnsatzSpec::singlet_uccsd();
    default:
      break;
  }
  throw UsageError("the adaptive ansatz is grown by the adapt subcommand");
}

OptimizerConfig config_for(OptimizerKind kind) {
  return kind == OptimizerKind::GradientFree ? OptimizerConfig::gradient_free()
                                             : OptimizerConfig::quasi_newton();
}

RunRecord record_from(const HamiltonianFile& hf, const VqeResult& r,
                      const std::string& ansatz, std::uint64_t seed) {
  RunRecord rec;
  rec.bond_length = hf.bond_length_angstrom;
  rec.p1 = r.noise_p1;
  rec.ansatz = ansatz;
  rec.optimizer = optimizer_name(r.optimizer);
  rec.seed = seed;
  rec.energy = r.energy;
  rec.exact_e0 = r.exact_e0;
  rec.energy_error = r.energy_error;
  rec.fidelity = r.fidelity;
  rec.n_params = static_cast<int>(r.parameters.size());
  rec.n_1q = r.gates.n_single_qubit;
  rec.n_cnot = r.gates.n_cnot;
  rec.evaluations = r.evaluations;
  rec.converged = r.converged;
  rec.params = r.parameters;
  return rec;
}

std::string gnuplot_script(const std::string& csv_path) {
  std::string data = csv_path.empty() ? std::string("sweep.csv") : csv_path;
  std::string s;
  s += "set datafile separator ','\n";
  s += "set xlabel 'depolarizing probability p1'\n";
  s += "set ylabel 'energy error (Ha)'\n";
  s += "set key left top\n";
  s += "plot '" + data +
       "' every ::1 using 2:9 with points pt 7 title 'energy error'\n";
  return s;
}

}  // namespace

std::string csv_header() {
  return "bond_length,p1,ansatz,optimizer,seed,status,energy_ha,exact_e0_ha,"
         "energy_error_ha,fidelity,n_params,n_1q,n_cnot,evaluations,"
         "converged,params";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << format_double(r.bond_length) << ',' << format_double(r.p1) << ','
      << csv_field(r.ansatz) << ',' << csv_field(r.optimizer) << ',' << r.seed
      << ',' << csv_field(r.status) << ',' << format_double(r.energy) << ','
      << format_double(r.exact_e0) << ',' << format_double(r.energy_error)
      << ',' << format_double(r.fidelity) << ',' << r.n_params << ','
      << format_double(r.n_1q) << ',' << format_double(r.n_cnot) << ','
      << r.evaluations << ',' << (r.converged ? 1 : 0) << ','
      << join_values(r.params);
  return out.str();
}

std::string records_to_csv(const std::vector<RunRecord>& rows) {
  std::string out = csv_header() + "\n";
  for (const auto& r : rows) out += to_csv_row(r) + "\n";
  return out;
}

std::vector<RunRecord> cmd_vqe(const VqeCliOptions& opt) {
  if (opt.rc < 0) throw UsageError("--rc wants a non-negative count");
  HamiltonianFile hf = resolve_hamiltonian(opt.hamiltonian_path, opt.bundled);
  AnsatzSpec spec = spec_for(opt.family);
  if (spec.n_qubits != hf.n_qubits)
    throw UsageError("ansatz " + std::string(family_name(opt.family)) +
                     " runs on " + std::to_string(spec.n_qubits) +
                     " qubits, the hamiltonian has " +
                     std::to_string(hf.n_qubits));
  PauliSum h = hf.to_pauli_sum();
  NoiseModel noise = make_noise(opt.p1, opt.noisy_diagonal);
  OptimizerConfig cfg = config_for(opt.optimizer);
  Circuit circuit = build_ansatz(spec);
  if (!opt.initial_point.empty()) {
    if (static_cast<int>(opt.initial_point.size()) != circuit.n_slots())
      throw UsageError("--x0 lists " +
                       std::to_string(opt.initial_point.size()) +
                       " values, the ansatz has " +
                       std::to_string(circuit.n_slots()) + " parameters");
    cfg.initial_point = opt.initial_point;
  }

  VqeResult bare = run_vqe(h, spec, noise, cfg);
  std::vector<RunRecord> rows{
      record_from(hf, bare, family_name(opt.family), opt.seed)};

  if (opt.rc > 0) {
    // Evaluate each randomized compilation at the bare optimum; the first
    // row becomes the across-seed mean, per-seed rows follow.
    SpectrumResult spectrum = ground_state(h);
    double e_sum = 0.0, f_sum = 0.0, n1q_sum = 0.0, cnot_sum = 0.0;
    std::vector<RunRecord> per_seed;
    for (int k = 0; k < opt.rc; ++k) {
      std::uint64_t rc_seed = opt.seed + static_cast<std::uint64_t>(k);
      Circuit twirled = randomized_compile(circuit, rc_seed);
      DensityMatrix rho = run_circuit(twirled, bare.parameters, noise);
      GateCounts counts = gate_counts(twirled);
      RunRecord row = rows.front();
      row.seed = rc_seed;
      row.energy = expectation(rho, h);
      row.energy_error = row.energy - bare.exact_e0;
      row.fidelity = ground_space_fidelity(rho, spectrum);
      row.n_1q = counts.n_single_qubit;
      row.n_cnot = counts.n_cnot;
      row.evaluations = 0;
      e_sum += row.energy;
      f_sum += row.fidelity;
      n1q_sum += row.n_1q;
      cnot_sum += row.n_cnot;
      per_seed.push_back(std::move(row));
    }
    RunRecord& mean = rows.front();
    mean.energy = e_sum / opt.rc;
    mean.energy_error = mean.energy - bare.exact_e0;
    mean.fidelity = f_sum / opt.rc;
    mean.n_1q = n1q_sum / opt.rc;
    mean.n_cnot = cnot_sum / opt.rc;
    rows.insert(rows.end(), per_seed.begin(), per_seed.end());
  }

  if (!opt.out_path.empty()) write_text_file(opt.out_path, records_to_csv(rows));
  return rows;
}

AdaptCliOutput cmd_adapt(const AdaptCliOptions& opt) {
  if (opt.grad_threshold <= 0.0)
    throw UsageError("--grad-threshold must be positive");
  if (opt.max_depth < 1) throw UsageError("--max-depth must be at least 1");
  HamiltonianFile hf = resolve_hamiltonian(opt.hamiltonian_path, opt.bundled);
  PauliSum h = hf.to_pauli_sum();
  NoiseModel noise = make_noise(opt.p1, opt.noisy_diagonal);
  OptimizerConfig cfg = config_for(opt.optimizer);
  AdaptOptions aopt;
  aopt.grad_threshold = opt.grad_threshold;
  aopt.max_depth = opt.max_depth;
  aopt.noiseless_gradients = opt.noiseless_gradients;
  aopt.use_inf_norm = opt.inf_norm;

  AdaptCliOutput out;
  out.result = run_adapt(h, noise, cfg, aopt);
  out.summary = record_from(hf, out.result.final_result, "adapt", 0);

  std::ostringstream csv;
  csv << "iteration,selected,selected_id,grad_norm,energy_ha,fidelity,"
         "n_params,evaluations,params,gradients\n";
  for (std::size_t i = 0; i < out.result.iterations.size(); ++i) {
    const AdaptIteration& it = out.result.iterations[i];
    csv << i << ',' << it.selected << ',' << csv_field(it.selected_id) << ','
        << format_double(it.grad_norm) << ',' << format_double(it.energy)
        << ',' << format_double(it.fidelity) << ',' << it.params.size() << ','
        << it.evaluations << ',' << join_values(it.params) << ','
        << join_values(it.gradients) << "\n";
  }
  const VqeResult& fin = out.result.final_result;
  double last_norm = out.result.iterations.empty()
                         ? 0.0
                         : out.result.iterations.back().grad_norm;
  csv << "summary,-1,," << format_double(last_norm) << ','
      << format_double(fin.energy) << ',' << format_double(fin.fidelity) << ','
      << fin.parameters.size() << ',' << fin.evaluations << ','
      << join_values(fin.parameters) << ",\n";
  out.trace_csv = csv.str();

  if (!opt.out_path.empty()) write_text_file(opt.out_path, out.trace_csv);
  return out;
}

namespace {

struct SweepCell {
  const HamiltonianFile* file = nullptr;
  const PauliSum* h = nullptr;
  double p1 = 0.0;
  OptimizerKind optimizer = OptimizerKind::GradientFree;
  AnsatzFamily family = AnsatzFamily::Uccd;
  std::uint64_t seed = 0;
};

RunRecord run_sweep_cell(const SweepCell& cell) {
  RunRecord rec;
  rec.bond_length = cell.file->bond_length_angstrom;
  rec.p1 = cell.p1;
  rec.ansatz = family_name(cell.family);
  rec.optimizer = optimizer_name(cell.optimizer);
  rec.seed = cell.seed;
  try {
    AnsatzSpec spec = spec_for(cell.family);
    if (spec.n_qubits != cell.file->n_qubits)
      throw std::runtime_error("ansatz needs " +
                               std::to_string(spec.n_qubits) +
                               " qubits, hamiltonian has " +
                               std::to_string(cell.file->n_qubits));
    NoiseModel noise = NoiseModel::depolarizing(cell.p1);
    VqeResult res =
        run_vqe(*cell.h, spec, noise, config_for(cell.optimizer));
    rec = record_from(*cell.file, res, family_name(cell.family), cell.seed);
  } catch (const std::exception& e) {
    rec.status = std::string("error: ") + e.what();
  }
  return rec;
}

}  // namespace

std::vector<RunRecord> cmd_sweep(const SweepCliOptions& opt) {
  SweepManifest manifest;
  try {
    manifest = load_manifest(opt.manifest_path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::vector<HamiltonianFile> files;
  files.reserve(manifest.hamiltonian_paths.size());
  for (const auto& path : manifest.hamiltonian_paths) {
    try {
      files.push_back(load_hamiltonian(path));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  std::vector<PauliSum> sums;
  sums.reserve(files.size());
  for (const auto& f : files) sums.push_back(f.to_pauli_sum());

  // Cartesian product, axes nested in manifest field order.
  std::vector<SweepCell> cells;
  for (std::size_t i = 0; i < files.size(); ++i)
    for (double p1 : manifest.p1_values)
      for (OptimizerKind ok : manifest.optimizers)
        for (AnsatzFamily fam : manifest.families)
          for (std::uint64_t seed : manifest.seeds)
            cells.push_back({&files[i], &sums[i], p1, ok, fam, seed});

  int jobs = opt.jobs;
  if (jobs <= 0) {
    if (const char* env = std::getenv("QVLAB_JOBS")) jobs = std::atoi(env);
    if (jobs <= 0) jobs = 1;
  }
  jobs = std::min(jobs, static_cast<int>(cells.size()));

  std::vector<RunRecord> rows(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < cells.size();)
      rows[i] = run_sweep_cell(cells[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (!opt.out_path.empty()) write_text_file(opt.out_path, records_to_csv(rows));
  if (!opt.gnuplot_path.empty())
    write_text_file(opt.gnuplot_path, gnuplot_script(opt.out_path));
  return rows;
}

SpectrumResult cmd_exact(const ExactCliOptions& opt, std::string* report) {
  HamiltonianFile hf = resolve_hamiltonian(opt.hamiltonian_path, opt.bundled);
  SpectrumResult spectrum = ground_state(hf.to_pauli_sum());
  if (report) {
    std::ostringstream out;
    if (!hf.molecule.empty()) out << "molecule: " << hf.molecule << "\n";
    out << "n_qubits: " << hf.n_qubits << "\n";
    out << "eigenvalues_ha:\n";
    for (double e : spectrum.eigenvalues)
      out << "  " << format_double(e) << "\n";
    out << "ground_energy_ha: " << format_double(spectrum.ground_energy())
        << "\n";
    if (spectrum.degenerate)
      out << "ground_degeneracy: " << spectrum.degeneracy << "\n";
    if (opt.dump_state) {
      out << "ground_state:\n";
      const Vector& v = spectrum.ground_state;
      for (std::size_t i = 0; i < v.size(); ++i)
        out << "  " << i << " " << format_double(v[i].real()) << " "
            << format_double(v[i].imag()) << "\n";
    }
    *report = out.str();
  }
  return spectrum;
}

std::string cmd_compile(const CompileCliOptions& opt) {
  AnsatzSpec spec = spec_for(opt.family);
  Circuit c = build_ansatz(spec);
  if (opt.rc_seed) c = randomized_compile(c, *opt.rc_seed);
  if (!opt.thetas.empty()) {
    if (static_cast<int>(opt.thetas.size()) != c.n_slots())
      throw UsageError("--thetas lists " + std::to_string(opt.thetas.size()) +
                       " values, the ansatz has " +
                       std::to_string(c.n_slots()) + " parameters");
    Circuit bound(c.n_qubits());
    for (const Gate& g : c.gates()) {
      Gate bound_gate = g;
      if (g.is_parameterized())
        bound_gate.angle = AngleExpr::constant(g.angle.value(opt.thetas));
      bound.append(bound_gate);
    }
    c = std::move(bound);
  }
  std::string text = c.serialize();
  if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
  return text;
}

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"noisy variational quantum eigensolver laboratory"};
  app.require_subcommand(1);

  VqeCliOptions vopt;
  std::string v_ansatz = "uccd";
  std::string v_optimizer = "cobyla";
  CLI::App* vqe = app.add_subcommand(
      "vqe", "optimize a fixed ansatz under depolarizing noise");
  vqe->add_option("--ham", vopt.hamiltonian_path,
                  "hamiltonian file (omit for the bundled NaH model)");
  vqe->add_flag("--bundled", vopt.bundled, "use the bundled NaH hamiltonian");
  vqe->add_option("--ansatz", v_ansatz, "uccd or uccsd-singlet")
      ->check(CLI::IsMember({"uccd", "uccsd-singlet"}));
  vqe->add_option("--p1", vopt.p1,
                  "single-qubit depolarizing probability (CNOT noise is 10x)");
  vqe->add_option("--optimizer", v_optimizer, "cobyla or lbfgs")
      ->check(CLI::IsMember({"cobyla", "lbfgs"}));
  vqe->add_option("--seed", vopt.seed, "base seed for randomized compiling");
  vqe->add_option("--rc", vopt.rc,
                  "average over N randomized compilations (the study uses 10)");
  vqe->add_flag("--noisy-diagonal", vopt.noisy_diagonal,
                "depolarize after Z and RZ gates too");
  vqe->add_option("--x0", vopt.initial_point,
                  "comma separated initial parameters")
      ->delimiter(',');
  vqe->add_option("--out", vopt.out_path, "also write the CSV table here");

  AdaptCliOptions aopt;
  std::string a_optimizer = "cobyla";
  CLI::App* adapt = app.add_subcommand(
      "adapt", "grow the ansatz operator by operator from pool gradients");
  adapt->add_option("--ham", aopt.hamiltonian_path,
                    "hamiltonian file (omit for the bundled NaH model)");
  adapt->add_flag("--bundled", aopt.bundled,
                  "use the bundled NaH hamiltonian");
  adapt->add_option("--p1", aopt.p1, "single-qubit depolarizing probability");
  adapt->add_option("--optimizer", a_optimizer, "cobyla or lbfgs")
      ->check(CLI::IsMember({"cobyla", "lbfgs"}));
  adapt->add_option("--grad-threshold", aopt.grad_threshold,
                    "stop once the pool gradient norm falls below this");
  adapt->add_option("--max-depth", aopt.max_depth,
                    "largest number of appended operators");
  adapt->add_flag("--noiseless-gradients", aopt.noiseless_gradients,
                  "select operators from noiseless pool gradients");
  adapt->add_flag("--inf-norm", aopt.inf_norm,
                  "stop on the max |gradient| instead of the two-norm");
  adapt->add_flag("--noisy-diagonal", aopt.noisy_diagonal,
                  "depolarize after Z and RZ gates too");
  adapt->add_option("--out", aopt.out_path, "also write the trace CSV here");

  SweepCliOptions sopt;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run the Cartesian product of a sweep manifest");
  sweep->add_option("manifest", sopt.manifest_path, "sweep manifest file")
      ->required();
  sweep->add_option("--out", sopt.out_path, "also write the CSV table here");
  sweep->add_option("--gnuplot", sopt.gnuplot_path,
                    "write a gnuplot script for the CSV");
  sweep->add_option("--jobs", sopt.jobs,
                    "concurrent cells (default: QVLAB_JOBS, else 1)");

  ExactCliOptions eopt;
  CLI::App* exact = app.add_subcommand(
      "exact", "diagonalize the hamiltonian exactly");
  exact->add_option("--ham", eopt.hamiltonian_path,
                    "hamiltonian file (omit for the bundled NaH model)");
  exact->add_flag("--bundled", eopt.bundled,
                  "use the bundled NaH hamiltonian");
  exact->add_flag("--state", eopt.dump_state, "dump the ground state vector");

  CompileCliOptions copt;
  std::string c_ansatz = "uccd";
  CLI::App* compile = app.add_subcommand(
      "compile", "dump the compiled ansatz circuit as text");
  compile->add_option("--ansatz", c_ansatz, "uccd or uccsd-singlet")
      ->check(CLI::IsMember({"uccd", "uccsd-singlet"}));
  compile->add_option("--thetas", copt.thetas,
                      "comma separated parameter values to bind")
      ->delimiter(',');
  compile->add_option("--rc-seed", copt.rc_seed,
                      "randomized compiling seed (omit for the bare circuit)");
  compile->add_option("--out", copt.out_path, "also write the circuit here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(vqe)) {
      vopt.family = v_ansatz == "uccd" ? AnsatzFamily::Uccd
                                       : AnsatzFamily::SingletUccsd;
      vopt.optimizer = v_optimizer == "cobyla" ? OptimizerKind::GradientFree
                                               : OptimizerKind::QuasiNewton;
      std::cout << records_to_csv(cmd_vqe(vopt));
    } else if (app.got_subcommand(adapt)) {
      aopt.optimizer = a_optimizer == "cobyla" ? OptimizerKind::GradientFree
                                               : OptimizerKind::QuasiNewton;
      std::cout << cmd_adapt(aopt).trace_csv;
    } else if (app.got_subcommand(sweep)) {
      std::cout << records_to_csv(cmd_sweep(sopt));
    } else if (app.got_subcommand(exact)) {
      std::string report;
      cmd_exact(eopt, &report);
      std::cout << report;
    } else if (app.got_subcommand(compile)) {
      copt.family = c_ansatz == "uccd" ? AnsatzFamily::Uccd
                                       : AnsatzFamily::SingletUccsd;
      std::cout << cmd_compile(copt);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace qvlab
