#pragma once

#include "qsearch/circuit.hpp"

namespace qsearch {

// operator keeps multi-controlled X gates, toffoli lowers them to ccx
// ladders, universal further expands every ccx over {cx + one-qubit gates}.
enum class LoweringLevel { Operator, Toffoli, Universal };

/// Phase oracle I - 2|i0><i0| over n register qubits plus one target qubit at
/// index n that the caller prepares in |->: X on every register qubit whose
/// bit of i0 is 0, an n-controlled X onto the target, mirrored X gates.
Circuit build_oracle_circuit(int n, std::uint64_t i0);

/// Inversion about the mean 2|psi><psi| - I on n qubits: H on every qubit
/// around a core equal to 2|0><0| - I (X conjugation, two gphase i, and an
/// H-conjugated multi-controlled X on the last qubit). Matrix equality is
/// exact, not up to global phase.
Circuit build_diffusion_circuit(int n);

/// Multi-controlled X over the given control indices: a compute ladder of ccx
/// into work qubits starting at work_base (c-2 of them for c >= 3 controls),
/// one ccx onto the target, then the ladder uncomputed. 1 and 2 controls pass
/// through as plain cx/ccx.
Circuit lower_mcx(const std::vector<int>& controls, int target, int work_base);

/// Fixed 3-qubit realization of the Toffoli gate over {h, t, tdg, cx} whose
/// matrix equals the Toffoli matrix exactly.
Circuit lower_toffoli();

/// Rewrites every cx with >= 3 controls through lower_mcx, growing the work
/// register as needed. Gates already at toffoli level pass through.
Circuit lower_to_toffoli(const Circuit& c);

/// lower_to_toffoli, then every 2-control cx becomes the lower_toffoli block.
Circuit lower_to_universal(const Circuit& c);

/// Full search circuit: n search qubits, one oracle target (prepared |1> then
/// H), k repetitions of [oracle; diffusion], lowered to the requested level.
Circuit assemble_grover_circuit(int n, std::uint64_t i0, int k, LoweringLevel level);

/// pi*(17n - 15)*sqrt(2^n) + n + 2, the reference elementary-gate count model.
double predicted_gate_count(int n);

// The assembly split at iteration boundaries; all three circuits share one
// qubit layout (n+1 main qubits plus the work register of the widest block).
struct GroverBlocks {
    Circuit prep;
    Circuit oracle;
    Circuit diffusion;
};
GroverBlocks grover_blocks(int n, std::uint64_t i0, LoweringLevel level);

} // namespace qsearch
