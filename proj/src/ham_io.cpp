#include "qvlab/ham_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace qvlab {

namespace {

[[noreturn]] void fail_at(const std::string& source, int line,
                          const std::string& msg) {
  throw std::runtime_error(source + ":" + std::to_string(line) + ": " + msg);
}

// Strips comments and surrounding whitespace; returns false for blank lines.
bool clean_line(std::string& s) {
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return false;
  auto last = s.find_last_not_of(" \t\r\n");
  s = s.substr(first, last - first + 1);
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

double parse_double_token(const std::string& tok, const std::string& source,
                          int line) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail_at(source, line, "expected a number, got '" + tok + "'");
  return v;
}

std::uint64_t parse_seed_token(const std::string& tok,
                               const std::string& source, int line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    fail_at(source, line, "expected an unsigned integer seed, got '" + tok + "'");
  return v;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), p);
}

PauliSum HamiltonianFile::to_pauli_sum() const {
  PauliSum sum(n_qubits);
  for (const auto& [coeff, word] : terms)
    sum.add_term(coeff, PauliString(n_qubits, word));
  return sum;
}

HamiltonianFile parse_hamiltonian(std::istream& in,
                                  const std::string& source_name) {
  HamiltonianFile h;
  bool have_n_qubits = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!clean_line(raw)) continue;
    if (auto colon = raw.find(':'); colon != std::string::npos) {
      std::string key = raw.substr(0, colon);
      std::string value = raw.substr(colon + 1);
      if (!clean_line(value))
        fail_at(source_name, lineno, "missing value for '" + key + "'");
      if (key == "molecule") {
        h.molecule = value;
      } else if (key == "bond_length_angstrom") {
        h.bond_length_angstrom = parse_double_token(value, source_name, lineno);
      } else if (key == "basis") {
        h.basis = value;
      } else if (key == "n_qubits") {
        double v = parse_double_token(value, source_name, lineno);
        int n = static_cast<int>(v);
        if (v != n || n <= 0)
          fail_at(source_name, lineno, "n_qubits must be a positive integer");
        h.n_qubits = n;
        have_n_qubits = true;
      } else {
        fail_at(source_name, lineno, "unknown header key '" + key + "'");
      }
      continue;
    }
    auto toks = split_ws(raw);
    if (toks.size() != 2)
      fail_at(source_name, lineno,
              "expected 'coefficient word', got " +
                  std::to_string(toks.size()) + " fields");
    if (!have_n_qubits)
      fail_at(source_name, lineno, "term appears before n_qubits header");
    double coeff = parse_double_token(toks[0], source_name, lineno);
    const std::string& word = toks[1];
    if (static_cast<int>(word.size()) != h.n_qubits)
      fail_at(source_name, lineno,
              "word '" + word + "' has length " +
                  std::to_string(word.size()) + ", expected " +
                  std::to_string(h.n_qubits));
    for (char c : word)
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
        fail_at(source_name, lineno,
                std::string("invalid Pauli letter '") + c + "' in word '" +
                    word + "'");
    for (const auto& [prev_coeff, prev_word] : h.terms)
      if (prev_word == word)
        fail_at(source_name, lineno, "duplicate term word '" + word + "'");
    h.terms.emplace_back(coeff, word);
  }
  if (!have_n_qubits)
    fail_at(source_name, lineno, "missing n_qubits header");
  return h;
}

HamiltonianFile load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open hamiltonian file: " + path);
  return parse_hamiltonian(in, path);
}

std::string serialize_hamiltonian(const HamiltonianFile& h) {
  std::ostringstream out;
  if (!h.molecule.empty()) out << "molecule: " << h.molecule << "\n";
  if (h.bond_length_angstrom != 0.0)
    out << "bond_length_angstrom: " << format_double(h.bond_length_angstrom)
        << "\n";
  if (!h.basis.empty()) out << "basis: " << h.basis << "\n";
  out << "n_qubits: " << h.n_qubits << "\n";
  for (const auto& [coeff, word] : h.terms)
    out << format_double(coeff) << " " << word << "\n";
  return out.str();
}

HamiltonianFile bundled_nah_file() {
  HamiltonianFile h;
  h.molecule = "NaH";
  h.bond_length_angstrom = 1.91438;
  h.basis = "sto-3g";
  h.n_qubits = 4;
  h.terms = {
      {-159.40289, "IIII"}, {0.0323625, "XXII"},   {0.0202421, "XXXX"},
      {0.0202421, "XXYY"},  {0.0229208, "XXZI"},   {-0.00944179, "XXIZ"},
      {0.0323625, "IIXX"},  {0.0323625, "YYII"},   {0.0202421, "YYXX"},
      {0.0202421, "YYYY"},  {0.0229208, "YYZI"},   {-0.00944179, "YYIZ"},
      {0.0323625, "IIYY"},  {0.0149385, "ZIII"},   {0.0229208, "ZIXX"},
      {0.0229208, "ZIYY"},  {0.0816923, "ZZII"},   {0.158901, "ZIZI"},
      {0.101934, "ZIIZ"},   {-0.387818, "IZII"},   {-0.00944179, "IZXX"},
      {-0.00944179, "IZYY"},{0.101934, "IZZI"},    {0.117450, "IZIZ"},
      {0.0149385, "IIZI"},  {0.0816923, "IIZZ"},   {-0.387818, "IIIZ"},
  };
  return h;
}

PauliSum bundled_nah() { return bundled_nah_file().to_pauli_sum(); }

SweepManifest parse_manifest(std::istream& in, const std::string& source_name) {
  SweepManifest m;
  bool saw_p1 = false, saw_opt = false, saw_fam = false, saw_seeds = false;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!clean_line(raw)) continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos)
      fail_at(source_name, lineno, "expected 'key: values'");
    std::string key = raw.substr(0, colon);
    auto values = split_ws(raw.substr(colon + 1));
    if (values.empty())
      fail_at(source_name, lineno, "axis '" + key + "' lists no values");
    if (key == "hamiltonian") {
      for (auto& v : values) m.hamiltonian_paths.push_back(v);
    } else if (key == "p1") {
      if (!saw_p1) m.p1_values.clear();
      saw_p1 = true;
      for (auto& v : values) {
        double p = parse_double_token(v, source_name, lineno);
        if (p < 0.0 || p > 0.1)
          fail_at(source_name, lineno,
                  "p1 value " + v + " outside [0, 0.1]");
        m.p1_values.push_back(p);
      }
    } else if (key == "optimizers") {
      if (!saw_opt) m.optimizers.clear();
      saw_opt = true;
      for (auto& v : values) {
        if (v == "cobyla")
          m.optimizers.push_back(OptimizerKind::GradientFree);
        else if (v == "lbfgs")
          m.optimizers.push_back(OptimizerKind::QuasiNewton);
        else
          fail_at(source_name, lineno,
                  "unknown optimizer '" + v + "' (expected cobyla or lbfgs)");
      }
    } else if (key == "ansatz") {
      if (!saw_fam) m.families.clear();
      saw_fam = true;
      for (auto& v : values) {
        if (v == "uccd")
          m.families.push_back(AnsatzFamily::Uccd);
        else if (v == "uccsd-singlet")
          m.families.push_back(AnsatzFamily::SingletUccsd);
        else
          fail_at(source_name, lineno,
                  "unknown ansatz '" + v +
                      "' (expected uccd or uccsd-singlet)");
      }
    } else if (key == "seeds") {
      if (!saw_seeds) m.seeds.clear();
      saw_seeds = true;
      for (auto& v : values)
        m.seeds.push_back(parse_seed_token(v, source_name, lineno));
    } else {
      fail_at(source_name, lineno, "unknown manifest key '" + key + "'");
    }
  }
  if (m.hamiltonian_paths.empty())
    fail_at(source_name, lineno, "manifest lists no hamiltonian files");
  return m;
}

SweepManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  SweepManifest m = parse_manifest(in, path);
  auto slash = path.find_last_of('/');
  if (slash != std::string::npos) {
    std::string dir = path.substr(0, slash + 1);
    for (auto& p : m.hamiltonian_paths)
      if (!p.empty() && p.front() != '/') p = dir + p;
  }
  return m;
}

}  // namespace qvlab
