#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qvlab/matrix.hpp"

namespace qvlab {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

Pauli pauli_from_char(char c);  // throws std::invalid_argument on bad letter

// Tensor product of single-qubit Paulis with a global phase in {1, i, -1, -i}.
//
// Qubit ordering is little-endian throughout: computational basis index
// b = sum_k q_k 2^k, qubit 0 least significant.
class PauliString {
 public:
  explicit PauliString(int n_qubits);  // identity word, phase +1
  PauliString(int n_qubits, std::string_view word);
  static PauliString single(int n_qubits, int qubit, Pauli p);

  int n_qubits() const { return static_cast<int>(letters_.size()); }
  Pauli letter(int qubit) const { return letters_[qubit]; }
  void set_letter(int qubit, Pauli p) { letters_[qubit] = p; }

  // phase = i^phase_power
  int phase_power() const { return phase_pow_; }
  cplx phase() const;
  void set_phase_power(int k) { phase_pow_ = ((k % 4) + 4) % 4; }
  PauliString without_phase() const;

  bool is_identity_word() const;  // all letters I, phase ignored
  int weight() const;
  std::vector<int> support() const;
  std::string word() const;

  bool commutes_with(const PauliString& other) const;
  bool same_word(const PauliString& other) const;

  // Dense 2^n x 2^n matrix including the phase.
  Matrix to_matrix() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString& a, const PauliString& b);

 private:
  std::vector<Pauli> letters_;
  int phase_pow_ = 0;
};

// Lexicographic comparison of letter patterns (phase ignored).
bool word_less(const PauliString& a, const PauliString& b);

// Complex-weighted sum of phase-free Pauli words, kept canonical at all
// times: terms sorted lexicographically, duplicate words merged, and
// coefficients with |c| < coeff_cutoff() dropped.
class PauliSum {
 public:
  explicit PauliSum(int n_qubits);
  static PauliSum identity(int n_qubits, cplx coefficient);

  static constexpr double coeff_cutoff() { return 1e-12; }

  int n_qubits() const { return n_qubits_; }
  int size() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }

  const cplx& coeff(int i) const { return terms_[i].first; }
  const PauliString& term(int i) const { return terms_[i].second; }

  // Folds the string's phase into the coefficient.
  void add_term(cplx coefficient, const PauliString& s);

  bool is_hermitian(double tol = 1e-12) const;       // all coefficients real
  bool is_anti_hermitian(double tol = 1e-12) const;  // all imaginary

  PauliSum adjoint() const;
  Matrix to_matrix() const;  // n_qubits <= 10 guard

  PauliSum& operator+=(const PauliSum& rhs);
  PauliSum& operator-=(const PauliSum& rhs);
  PauliSum& operator*=(cplx s);

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  int n_qubits_;
  std::vector<std::pair<cplx, PauliString>> terms_;
};

PauliSum operator+(PauliSum lhs, const PauliSum& rhs);
PauliSum operator-(PauliSum lhs, const PauliSum& rhs);
PauliSum operator*(cplx s, PauliSum m);
PauliSum operator*(const PauliSum& a, const PauliSum& b);

// ab - ba in canonical form.
PauliSum commutator(const PauliSum& a, const PauliSum& b);

}  // namespace qvlab
