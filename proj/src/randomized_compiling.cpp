#include "qvlab/randomized_compiling.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "qvlab/pauli.hpp"

namespace qvlab {

namespace {

struct WorkGate {
  Gate g;
  bool rc_inserted = false;
};

std::array<cplx, 4> pauli_matrix2(Pauli p) {
  switch (p) {
    case Pauli::I: return {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)};
    case Pauli::X: return {cplx(0, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)};
    case Pauli::Y: return {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)};
    case Pauli::Z: return {cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(-1, 0)};
  }
  return {};
}

std::array<cplx, 4> matrix2_of(const Gate& g) {
  const Matrix m = g.matrix2({});
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

std::array<cplx, 4> mul2(const std::array<cplx, 4>& a,
                         const std::array<cplx, 4>& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

bool merge_eligible(const WorkGate& wg) {
  if (wg.rc_inserted) return false;
  if (wg.g.kind == GateKind::CNOT) return false;
  if (is_rotation(wg.g.kind) && !wg.g.angle.is_constant()) return false;
  return true;
}

Gate standalone_pauli(Pauli p, int qubit) {
  switch (p) {
    case Pauli::X: return Gate::x(qubit);
    case Pauli::Y: return Gate::y(qubit);
    case Pauli::Z: return Gate::z(qubit);
    default: break;
  }
  throw std::logic_error("identity letters never materialize");
}

// Pauli letters as (x, z) bit pairs: I=(0,0), X=(1,0), Y=(1,1), Z=(0,1).
Pauli bits_to_letter(bool x, bool z) {
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

}  // namespace

Circuit randomized_compile(const Circuit& c, std::uint64_t seed) {
  // Alternating easy segments and hard cycles; easy[k] precedes hard[k].
  std::vector<std::vector<WorkGate>> easy(1);
  std::vector<std::vector<Gate>> hard;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      if (hard.size() < easy.size()) hard.emplace_back();
      hard.back().push_back(g);
    } else {
      if (hard.size() == easy.size()) easy.emplace_back();
      easy.back().push_back({g, false});
    }
  }
  if (hard.size() == easy.size()) easy.emplace_back();

  std::mt19937_64 rng(seed);

  for (std::size_t k = 0; k < hard.size(); ++k) {
    const std::vector<Gate>& block = hard[k];
    std::vector<int> support;
    for (const Gate& g : block) {
      support.push_back(g.control);
      support.push_back(g.target);
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    // Uniform twirl letter per cycle qubit. 2^64 is divisible by 4, so the
    // low bits are exactly uniform.
    std::vector<Pauli> twirl(support.size());
    for (auto& p : twirl) {
      constexpr Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
      p = letters[rng() & 3];
    }

    // Push the twirl word through the cycle. Per CNOT, X on the control
    // copies onto the target and Z on the target copies onto the control;
    // signs are a global phase and dropped.
    std::vector<char> xbit(c.n_qubits(), 0), zbit(c.n_qubits(), 0);
    for (std::size_t i = 0; i < support.size(); ++i) {
      const Pauli p = twirl[i];
      xbit[support[i]] = p == Pauli::X || p == Pauli::Y;
      zbit[support[i]] = p == Pauli::Z || p == Pauli::Y;
    }
    for (const Gate& g : block) {
      xbit[g.target] ^= xbit[g.control];
      zbit[g.control] ^= zbit[g.target];
    }

    // Twirl letters: last chance to ride an original gate before the block.
    for (std::size_t i = 0; i < support.size(); ++i) {
      const int q = support[i];
      if (twirl[i] == Pauli::I) continue;
      auto& seg = easy[k];
      auto it = std::find_if(seg.rbegin(), seg.rend(), [q](const WorkGate& w) {
        return w.g.target == q;
      });
      if (it != seg.rend() && merge_eligible(*it)) {
        it->g = Gate::u1q(q, mul2(pauli_matrix2(twirl[i]), matrix2_of(it->g)));
      } else {
        seg.push_back({standalone_pauli(twirl[i], q), true});
      }
    }

    // Correction letters: first original gate after the block.
    std::vector<WorkGate> prepend;
    for (int q : support) {
      const Pauli letter = bits_to_letter(xbit[q], zbit[q]);
      if (letter == Pauli::I) continue;
      auto& seg = easy[k + 1];
      auto it = std::find_if(seg.begin(), seg.end(), [q](const WorkGate& w) {
        return w.g.target == q;
      });
      if (it != seg.end() && merge_eligible(*it)) {
        it->g = Gate::u1q(q, mul2(matrix2_of(it->g), pauli_matrix2(letter)));
      } else {
        prepend.push_back({standalone_pauli(letter, q), true});
      }
    }
    easy[k + 1].insert(easy[k + 1].begin(), prepend.begin(), prepend.end());
  }

  Circuit out(c.n_qubits());
  for (int s = 0; s < c.n_slots(); ++s) out.add_slot(c.slot_name(s));
  for (std::size_t k = 0; k < easy.size(); ++k) {
    for (const WorkGate& w : easy[k]) out.append(w.g);
    if (k < hard.size())
      for (const Gate& g : hard[k]) out.append(g);
  }
  return out;
}

}  // namespace qvlab
