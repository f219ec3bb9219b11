#include "qvlab/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qvlab {

namespace {

int checked_qubit_count(int n_qubits) {
  if (n_qubits <= 0) throw std::invalid_argument("need at least one qubit");
  return n_qubits;
}

// Single-letter products, letters indexed I=0, X=1, Y=2, Z=3. Each entry is
// (result letter, power of i): X*Y = iZ, Y*Z = iX, Z*X = iY, reversed order
// picks up -i (power 3).
struct LetterProduct {
  int letter;
  int phase_pow;
};

constexpr LetterProduct kLetterMul[4][4] = {
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
    {{1, 0}, {0, 0}, {3, 1}, {2, 3}},
    {{2, 0}, {3, 3}, {0, 0}, {1, 1}},
    {{3, 0}, {2, 1}, {1, 3}, {0, 0}},
};

constexpr int letter_index(Pauli p) {
  switch (p) {
    case Pauli::I: return 0;
    case Pauli::X: return 1;
    case Pauli::Y: return 2;
    case Pauli::Z: return 3;
  }
  return 0;
}

constexpr Pauli index_letter(int i) {
  constexpr Pauli table[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  return table[i];
}

}  // namespace

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter '") + c +
                                  "'");
  }
}

PauliString::PauliString(int n_qubits)
    : letters_(checked_qubit_count(n_qubits), Pauli::I) {}

PauliString::PauliString(int n_qubits, std::string_view word)
    : letters_(checked_qubit_count(n_qubits), Pauli::I) {
  if (static_cast<int>(word.size()) != n_qubits)
    throw std::invalid_argument("Pauli word length does not match qubit count");
  for (int q = 0; q < n_qubits; ++q) letters_[q] = pauli_from_char(word[q]);
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  if (qubit < 0 || qubit >= n_qubits)
    throw std::out_of_range("qubit index out of range");
  PauliString s(n_qubits);
  s.set_letter(qubit, p);
  return s;
}

cplx PauliString::phase() const {
  constexpr cplx table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_pow_];
}

PauliString PauliString::without_phase() const {
  PauliString s = *this;
  s.phase_pow_ = 0;
  return s;
}

bool PauliString::is_identity_word() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Pauli p) { return p == Pauli::I; });
}

int PauliString::weight() const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [](Pauli p) { return p != Pauli::I; }));
}

std::vector<int> PauliString::support() const {
  std::vector<int> qs;
  for (int q = 0; q < n_qubits(); ++q)
    if (letters_[q] != Pauli::I) qs.push_back(q);
  return qs;
}

std::string PauliString::word() const {
  std::string w(letters_.size(), 'I');
  for (std::size_t q = 0; q < letters_.size(); ++q)
    w[q] = static_cast<char>(letters_[q]);
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_qubits() != other.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  int anti = 0;
  for (int q = 0; q < n_qubits(); ++q) {
    const Pauli a = letters_[q];
    const Pauli b = other.letters_[q];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

bool PauliString::same_word(const PauliString& other) const {
  return letters_ == other.letters_;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  PauliString out(a.n_qubits());
  int pw = a.phase_pow_ + b.phase_pow_;
  for (int q = 0; q < a.n_qubits(); ++q) {
    const LetterProduct lp =
        kLetterMul[letter_index(a.letters_[q])][letter_index(b.letters_[q])];
    out.letters_[q] = index_letter(lp.letter);
    pw += lp.phase_pow;
  }
  out.set_phase_power(pw);
  return out;
}

bool operator==(const PauliString& a, const PauliString& b) {
  return a.phase_pow_ == b.phase_pow_ && a.letters_ == b.letters_;
}

Matrix PauliString::to_matrix() const {
  // Little-endian: qubit 0 is the least significant bit of the basis index,
  // so it must be the innermost kron factor.
  Matrix m = Matrix::identity(1);
  for (int q = n_qubits() - 1; q >= 0; --q) {
    Matrix p(2);
    switch (letters_[q]) {
      case Pauli::I: p(0, 0) = 1.0; p(1, 1) = 1.0; break;
      case Pauli::X: p(0, 1) = 1.0; p(1, 0) = 1.0; break;
      case Pauli::Y: p(0, 1) = cplx{0.0, -1.0}; p(1, 0) = cplx{0.0, 1.0}; break;
      case Pauli::Z: p(0, 0) = 1.0; p(1, 1) = -1.0; break;
    }
    m = kron(m, p);
  }
  m *= phase();
  return m;
}

bool word_less(const PauliString& a, const PauliString& b) {
  return a.word() < b.word();
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(checked_qubit_count(n_qubits)) {}

PauliSum PauliSum::identity(int n_qubits, cplx coefficient) {
  PauliSum s(n_qubits);
  s.add_term(coefficient, PauliString(n_qubits));
  return s;
}

void PauliSum::add_term(cplx coefficient, const PauliString& s) {
  if (s.n_qubits() != n_qubits_)
    throw std::invalid_argument("qubit count mismatch");
  coefficient *= s.phase();
  const PauliString bare = s.without_phase();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), bare,
                             [](const auto& term, const PauliString& str) {
                               return word_less(term.second, str);
                             });
  if (it != terms_.end() && it->second.same_word(bare)) {
    it->first += coefficient;
    if (std::abs(it->first) < coeff_cutoff()) terms_.erase(it);
    return;
  }
  if (std::abs(coefficient) >= coeff_cutoff()) terms_.insert(it, {coefficient, bare});
}

bool PauliSum::is_hermitian(double tol) const {
  for (const auto& [c, s] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

bool PauliSum::is_anti_hermitian(double tol) const {
  for (const auto& [c, s] : terms_)
    if (std::abs(c.real()) > tol) return false;
  return true;
}

PauliSum PauliSum::adjoint() const {
  PauliSum out(n_qubits_);
  out.terms_ = terms_;
  for (auto& [c, s] : out.terms_) c = std::conj(c);
  return out;
}

Matrix PauliSum::to_matrix() const {
  if (n_qubits_ > 10)
    throw std::invalid_argument("dense conversion limited to 10 qubits");
  Matrix m(1 << n_qubits_);
  for (const auto& [c, s] : terms_) {
    Matrix p = s.to_matrix();
    p *= c;
    m += p;
  }
  return m;
}

PauliSum& PauliSum::operator+=(const PauliSum& rhs) {
  if (n_qubits_ != rhs.n_qubits_)
    throw std::invalid_argument("qubit count mismatch");
  for (const auto& [c, s] : rhs.terms_) add_term(c, s);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& rhs) {
  if (n_qubits_ != rhs.n_qubits_)
    throw std::invalid_argument("qubit count mismatch");
  for (const auto& [c, s] : rhs.terms_) add_term(-c, s);
  return *this;
}

PauliSum& PauliSum::operator*=(cplx s) {
  if (s == cplx{0.0, 0.0}) {
    terms_.clear();
    return *this;
  }
  for (auto& [c, str] : terms_) c *= s;
  return *this;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!a.terms_[i].second.same_word(b.terms_[i].second)) return false;
    if (std::abs(a.terms_[i].first - b.terms_[i].first) >
        PauliSum::coeff_cutoff())
      return false;
  }
  return true;
}

PauliSum operator+(PauliSum lhs, const PauliSum& rhs) { return lhs += rhs; }
PauliSum operator-(PauliSum lhs, const PauliSum& rhs) { return lhs -= rhs; }
PauliSum operator*(cplx s, PauliSum m) { return m *= s; }

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("qubit count mismatch");
  PauliSum out(a.n_qubits());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      out.add_term(a.coeff(i) * b.coeff(j), a.term(i) * b.term(j));
  return out;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b) {
  return a * b - b * a;
}

}  // namespace qvlab
