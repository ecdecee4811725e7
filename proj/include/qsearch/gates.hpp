#pragma once

#include <span>
#include <string>

#include "qsearch/qcore.hpp"

namespace qsearch {

// CX covers every control count: 1 control is CNOT, 2 is Toffoli, more is the
// generalized Toffoli. GPhase multiplies the whole state by a unit complex.
enum class GateKind { X, H, S, T, Tdg, CX, GPhase };

/// Circuit-text mnemonic; for CX the name depends on the control count
/// (cx / ccx / ncx).
std::string mnemonic(GateKind kind, int num_controls = 1);

/// Textbook matrix. CX takes the control count; GPhase is the 1x1 [phase].
Matrix gate_matrix(GateKind kind, int num_controls = 1, cplx phase = {1.0, 0.0});

// In-place kernels over amplitude pairs selected by bit masks; no 2^m x 2^m
// matrix is ever formed. Each pair is written exactly once, so partition-
// parallel execution would give identical results.

/// Applies an arbitrary 2x2 unitary to qubit q. Unitarity of u is asserted in
/// debug builds only.
void apply_one_qubit(StateVector& s, int q, const Matrix& u);

/// Applies one of the fixed one-qubit gates (X, H, S, T, Tdg) to qubit q.
void apply_gate(StateVector& s, GateKind kind, int q);

/// Flips the target bit of every basis state whose control bits are all 1.
void apply_controlled_x(StateVector& s, std::span<const int> controls, int target);

/// Multiplies every amplitude by a unit complex factor.
void apply_global_phase(StateVector& s, cplx factor);

} // namespace qsearch
