#pragma once

#include <cstdint>

#include "qvlab/circuit.hpp"

namespace qvlab {

// Pauli-twirls every hard cycle (maximal consecutive CNOT run) of the
// circuit: samples an independent uniform Pauli per cycle qubit as the
// twirling gate, conjugates the twirl word through the cycle's CNOTs to get
// the correction word, and absorbs both into the neighboring easy cycles.
// A twirl letter merges (as a U1Q product) into the last original
// constant-angle single-qubit gate on the same qubit before the cycle, a
// correction letter into the first one after it; when no such gate exists
// (empty slot, or a slot-bound rotation blocks the scan) a standalone Pauli
// gate is emitted instead. RC-inserted gates are never merge targets.
//
// The output is logically equivalent to the input (same unitary up to global
// phase), keeps the CNOT count unchanged, and is deterministic per seed.
Circuit randomized_compile(const Circuit& c, std::uint64_t seed);

}  // namespace qvlab
