#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qvlab/ham_io.hpp"

using namespace qvlab;

namespace {

// Writes content to a unique file under the system temp directory and
// removes it when the scope ends.
struct TempFile {
  std::filesystem::path path;

  TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("ham_io") {

TEST_CASE("format_double round trips") {
  for (double v : {0.0, 1.0, -0.5, 0.11745, 1e-4, -160.30347964516537,
                   3.141592653589793}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);  // exact round trip
    CHECK(s.find('\n') == std::string::npos);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("bundled hamiltonian") {
  HamiltonianFile f = bundled_nah_file();
  CHECK(f.molecule == "NaH");
  CHECK(f.bond_length_angstrom == doctest::Approx(1.91438));
  CHECK(f.basis == "sto-3g");
  CHECK(f.n_qubits == 4);
  REQUIRE(f.terms.size() == 27);
  CHECK(f.terms[0].second == "IIII");

  PauliSum h = f.to_pauli_sum();
  CHECK(h.n_qubits() == 4);
  CHECK(h.size() == 27);
  CHECK(h.is_hermitian());
  CHECK(bundled_nah() == h);

  // identity coefficient and total off-identity weight
  double identity_coeff = 0.0;
  double off_identity = 0.0;
  for (int i = 0; i < h.size(); ++i) {
    if (h.term(i).is_identity_word())
      identity_coeff = h.coeff(i).real();
    else
      off_identity += std::abs(h.coeff(i));
  }
  CHECK(identity_coeff == doctest::Approx(-159.40289).epsilon(1e-10));
  CHECK(off_identity == doctest::Approx(1.7889853600).epsilon(1e-9));
}

TEST_CASE("serialize and parse are inverse") {
  HamiltonianFile f = bundled_nah_file();
  const std::string text = serialize_hamiltonian(f);
  std::istringstream in(text);
  HamiltonianFile back = parse_hamiltonian(in, "round-trip");
  CHECK(back.molecule == f.molecule);
  CHECK(back.bond_length_angstrom == f.bond_length_angstrom);
  CHECK(back.basis == f.basis);
  CHECK(back.n_qubits == f.n_qubits);
  REQUIRE(back.terms.size() == f.terms.size());
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    CHECK(back.terms[i].first == f.terms[i].first);  // exact, via format_double
    CHECK(back.terms[i].second == f.terms[i].second);
  }
}

TEST_CASE("shipped data file matches the bundled table") {
  const std::string path = std::string(QVLAB_DATA_DIR) + "/nah_r1.91438.ham";
  HamiltonianFile f = load_hamiltonian(path);
  CHECK(f.to_pauli_sum() == bundled_nah());
  CHECK(f.molecule == "NaH");
  CHECK(f.n_qubits == 4);
  REQUIRE(f.terms.size() == 27);
}

TEST_CASE("comments and blank lines are ignored") {
  std::istringstream in(
      "# a molecular register\n"
      "n_qubits: 2\n"
      "\n"
      "-0.5 ZI  # trailing comment\n"
      "0.25 XX\n");
  HamiltonianFile f = parse_hamiltonian(in);
  CHECK(f.n_qubits == 2);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].first == -0.5);
  CHECK(f.terms[0].second == "ZI");
  CHECK(f.terms[1].second == "XX");
  CHECK(f.molecule.empty());
}

TEST_CASE("parse errors carry source and line") {
  auto message_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_hamiltonian(in, "bad.ham");
      return std::string();
    } catch (const std::runtime_error& e) {
      return std::string(e.what());
    }
  };

  SUBCASE("term before n_qubits") {
    std::string m = message_of("0.5 ZI\n");
    CHECK(m.find("bad.ham:1") != std::string::npos);
  }
  SUBCASE("word length mismatch") {
    std::string m = message_of("n_qubits: 2\n0.5 ZIZ\n");
    CHECK(m.find("bad.ham:2") != std::string::npos);
  }
  SUBCASE("bad pauli letter is named") {
    std::string m = message_of("n_qubits: 2\n0.5 ZQ\n");
    CHECK(m.find("bad.ham:2") != std::string::npos);
    CHECK(m.find('Q') != std::string::npos);
  }
  SUBCASE("unparsable coefficient") {
    std::string m = message_of("n_qubits: 2\nabc ZI\n");
    CHECK(m.find("bad.ham:2") != std::string::npos);
  }
  SUBCASE("duplicate word") {
    std::string m = message_of("n_qubits: 2\n0.5 ZI\n0.25 ZI\n");
    CHECK(m.find("bad.ham:3") != std::string::npos);
  }
  SUBCASE("wrong field count") {
    std::string m = message_of("n_qubits: 2\n0.5 ZI ZI\n");
    CHECK(m.find("bad.ham:2") != std::string::npos);
  }
  SUBCASE("bad qubit count") {
    std::string m = message_of("n_qubits: zero\n");
    CHECK(m.find("bad.ham:1") != std::string::npos);
  }
  SUBCASE("missing n_qubits") {
    std::string m = message_of("molecule: NaH\n");
    CHECK(!m.empty());
  }
  CHECK_THROWS_AS(load_hamiltonian("/nonexistent/f.ham"), std::runtime_error);
}

TEST_CASE("manifest defaults") {
  std::istringstream in("hamiltonian: some.ham\n");
  SweepManifest m = parse_manifest(in);
  REQUIRE(m.hamiltonian_paths.size() == 1);
  CHECK(m.hamiltonian_paths[0] == "some.ham");
  CHECK(m.p1_values == std::vector<double>{0.0, 1e-4, 1e-3, 1e-2});
  CHECK(m.optimizers == std::vector<OptimizerKind>{OptimizerKind::GradientFree});
  CHECK(m.families == std::vector<AnsatzFamily>{AnsatzFamily::Uccd});
  CHECK(m.seeds == std::vector<std::uint64_t>{0});
}

TEST_CASE("manifest overrides") {
  std::istringstream in(
      "# two registers, full grid\n"
      "hamiltonian: a.ham\n"
      "hamiltonian: b.ham\n"
      "p1: 0 1e-3\n"
      "optimizers: cobyla lbfgs\n"
      "ansatz: uccd uccsd-singlet\n"
      "seeds: 3 17\n");
  SweepManifest m = parse_manifest(in);
  CHECK(m.hamiltonian_paths == std::vector<std::string>{"a.ham", "b.ham"});
  CHECK(m.p1_values == std::vector<double>{0.0, 1e-3});
  CHECK(m.optimizers == std::vector<OptimizerKind>{OptimizerKind::GradientFree,
                                                   OptimizerKind::QuasiNewton});
  CHECK(m.families == std::vector<AnsatzFamily>{AnsatzFamily::Uccd,
                                                AnsatzFamily::SingletUccsd});
  CHECK(m.seeds == std::vector<std::uint64_t>{3, 17});

  // a second mention extends rather than resets
  std::istringstream in2(
      "hamiltonian: a.ham\n"
      "seeds: 1\n"
      "seeds: 2 3\n");
  SweepManifest m2 = parse_manifest(in2);
  CHECK(m2.seeds == std::vector<std::uint64_t>{1, 2, 3});
}

TEST_CASE("manifest rejections") {
  auto throws_with = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      parse_manifest(in, "m");
      return false;
    } catch (const std::runtime_error& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
  };
  CHECK(throws_with("p1: 0\n", "hamiltonian"));            // no register
  CHECK(throws_with("hamiltonian: a\np1:\n", "m:2"));      // empty axis
  CHECK(throws_with("hamiltonian: a\np1: 0.5\n", "m:2"));  // p1 out of range
  CHECK(throws_with("hamiltonian: a\np1: -1e-4\n", "m:2"));
  CHECK(throws_with("hamiltonian: a\noptimizers: bogus\n", "bogus"));
  CHECK(throws_with("hamiltonian: a\nansatz: uccsd\n", "uccsd"));
  CHECK(throws_with("hamiltonian: a\nseeds: -1\n", "m:2"));
  CHECK(throws_with("hamiltonian: a\nplanets: mars\n", "planets"));
}

TEST_CASE("load_manifest resolves paths against the manifest directory") {
  TempFile ham("qvlab_test_rel.ham",
               "n_qubits: 1\n-1 Z\n");
  TempFile man("qvlab_test_rel.manifest",
               "hamiltonian: qvlab_test_rel.ham\nseeds: 5\n");
  SweepManifest m = load_manifest(man.path.string());
  REQUIRE(m.hamiltonian_paths.size() == 1);
  // the stored path must now be loadable from any working directory
  HamiltonianFile f = load_hamiltonian(m.hamiltonian_paths[0]);
  CHECK(f.n_qubits == 1);
  CHECK(m.seeds == std::vector<std::uint64_t>{5});

  // absolute paths pass through untouched
  TempFile man2("qvlab_test_abs.manifest",
                "hamiltonian: " + ham.path.string() + "\n");
  SweepManifest m2 = load_manifest(man2.path.string());
  CHECK(m2.hamiltonian_paths[0] == ham.path.string());
}

}  // TEST_SUITE
