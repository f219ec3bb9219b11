#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvlab/ham_io.hpp"
#include "qvlab/oracle.hpp"
#include "qvlab/vqe.hpp"

namespace qvlab {

// Invalid flags / file contents; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunRecord {
  double bond_length = 0.0;
  double p1 = 0.0;
  std::string ansatz;
  std::string optimizer;
  std::uint64_t seed = 0;
  std::string status = "ok";  // "ok" or "error: ..."
  double energy = 0.0;
  double exact_e0 = 0.0;
  double energy_error = 0.0;
  double fidelity = 0.0;
  int n_params = 0;
  double n_1q = 0.0;  // real-valued so RC-mean rows can carry averages
  double n_cnot = 0.0;
  long evaluations = 0;
  bool converged = false;
  std::vector<double> params;  // joined with ';' in the params column
};

std::string csv_header();
std::string to_csv_row(const RunRecord& r);
std::string records_to_csv(const std::vector<RunRecord>& rows);

struct VqeCliOptions {
  std::string hamiltonian_path;  // empty means bundled
  bool bundled = false;
  AnsatzFamily family = AnsatzFamily::Uccd;
  double p1 = 0.0;
  OptimizerKind optimizer = OptimizerKind::GradientFree;
  std::uint64_t seed = 0;
  int rc = 0;  // 0: bare circuit; n > 0: average over n randomized compilations
  bool noisy_diagonal = false;  // disable the diagonal-gate noise exemption
  std::vector<double> initial_point;
  std::string out_path;
};

std::vector<RunRecord> cmd_vqe(const VqeCliOptions& opt);

struct AdaptCliOptions {
  std::string hamiltonian_path;
  bool bundled = false;
  double p1 = 0.0;
  OptimizerKind optimizer = OptimizerKind::GradientFree;
  double grad_threshold = 1e-2;
  int max_depth = 20;
  bool noiseless_gradients = false;
  bool inf_norm = false;
  bool noisy_diagonal = false;
  std::string out_path;
};

struct AdaptCliOutput {
  AdaptResult result;
  RunRecord summary;
  std::string trace_csv;  // iteration rows + summary row
};

AdaptCliOutput cmd_adapt(const AdaptCliOptions& opt);

struct SweepCliOptions {
  std::string manifest_path;
  std::string out_path;
  std::string gnuplot_path;
  int jobs = 0;  // 0: QVLAB_JOBS env var, else 1
};

std::vector<RunRecord> cmd_sweep(const SweepCliOptions& opt);

struct ExactCliOptions {
  std::string hamiltonian_path;
  bool bundled = false;
  bool dump_state = false;
};

SpectrumResult cmd_exact(const ExactCliOptions& opt, std::string* report);

struct CompileCliOptions {
  AnsatzFamily family = AnsatzFamily::Uccd;
  std::vector<double> thetas;       // bind when non-empty
  std::optional<std::uint64_t> rc_seed;
  std::string out_path;
};

std::string cmd_compile(const CompileCliOptions& opt);

// Full argument parsing and dispatch; returns the process exit code
// (0 success, 1 runtime failure, 2 usage/validation error).
int run_cli(const std::vector<std::string>& args);

}  // namespace qvlab
