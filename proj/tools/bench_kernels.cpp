// Times the serial reference kernels against the OpenMP ones on growing
// registers. Usage: bench_kernels [max_qubits] [repetitions]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "qvlab/density.hpp"
#include "qvlab/kernels.hpp"
#include "qvlab/pauli.hpp"

namespace k = qvlab::kernels;
using qvlab::cplx;

namespace {

double time_ms(int reps, const std::function<void()>& fn) {
  fn();  // warm up
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  std::chrono::duration<double, std::milli> dt =
      std::chrono::steady_clock::now() - start;
  return dt.count() / reps;
}

struct Bench {
  std::string name;
  std::function<void(k::Backend)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int max_qubits = argc > 1 ? std::atoi(argv[1]) : 10;
  int reps = argc > 2 ? std::atoi(argv[2]) : 20;
  if (max_qubits < 2 || max_qubits > 10 || reps < 1) {
    std::fprintf(stderr, "usage: bench_kernels [max_qubits 2..10] [reps]\n");
    return 2;
  }
  if (!k::parallel_available())
    std::printf("note: built without OpenMP, 'parallel' runs serially\n");

  std::printf("%8s  %-12s  %12s  %12s  %8s\n", "qubits", "kernel",
              "serial ms", "parallel ms", "speedup");
  for (int n = 4; n <= max_qubits; n += 2) {
    qvlab::DensityMatrix rho = qvlab::DensityMatrix::maximally_mixed(n);
    cplx* data = rho.matrix().data();
    std::array<cplx, 4> had{cplx(1, 0), cplx(1, 0), cplx(1, 0), cplx(-1, 0)};
    for (auto& v : had) v /= std::sqrt(2.0);
    qvlab::PauliString zz(n, std::string(n, 'Z'));

    std::vector<Bench> benches;
    benches.push_back({"apply_1q", [&](k::Backend b) {
                         k::set_backend(b);
                         k::apply_1q(data, n, 0, had);
                       }});
    benches.push_back({"apply_cnot", [&](k::Backend b) {
                         k::set_backend(b);
                         k::apply_cnot(data, n, 0, n - 1);
                       }});
    benches.push_back({"depolarize", [&](k::Backend b) {
                         k::set_backend(b);
                         k::depolarize(data, n, 1, 0.01);
                       }});
    benches.push_back({"expectation", [&](k::Backend b) {
                         k::set_backend(b);
                         volatile double re = k::pauli_expectation(data, n, zz).real();
                         (void)re;
                       }});
    benches.push_back({"purity", [&](k::Backend b) {
                         k::set_backend(b);
                         volatile double p = k::sum_abs2(data, rho.matrix().size());
                         (void)p;
                       }});

    for (auto& bench : benches) {
      double serial = time_ms(reps, [&] { bench.run(k::Backend::serial); });
      double par = time_ms(reps, [&] { bench.run(k::Backend::parallel); });
      std::printf("%8d  %-12s  %12.4f  %12.4f  %7.2fx\n", n,
                  bench.name.c_str(), serial, par, serial / par);
    }
  }
  k::set_backend(k::Backend::automatic);
  return 0;
}
