#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/gates.hpp"

namespace qsearch {

// One gate application. controls is meaningful for CX only, phase for GPhase
// only; target is unused by GPhase.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> controls;
    int target = -1;
    cplx phase = {1.0, 0.0};
};

// Ordered gate list over num_qubits main qubits plus num_work_qubits work
// qubits occupying the highest indices. Work qubits enter as |0> and every
// construction that borrows them restores them to |0>.
struct Circuit {
    int num_qubits = 0;
    int num_work_qubits = 0;
    std::vector<Gate> ops;

    int total_qubits() const { return num_qubits + num_work_qubits; }
};

struct ParseError : std::runtime_error {
    ParseError(int line_no, const std::string& message);
    int line;
};

// Text format, one statement per line; '#' starts a comment:
//   qubits <m>                  header, required first
//   work <k>                    optional, before any gate
//   x|h|s|t|tdg <q>
//   cx <c> <t>
//   ccx <c1> <c2> <t>
//   ncx <c1> ... <ck> <t>       k >= 1 controls
//   gphase i|-1|-i|1
Circuit parse_circuit(std::string_view text);

/// Canonical text: lowercase mnemonics, single spaces, cx/ccx for 1/2-control
/// gates. parse_circuit(serialize_circuit(c)) reproduces c.
std::string serialize_circuit(const Circuit& c);

/// Applies the ops in order to a copy of input (which must span
/// num_qubits + num_work_qubits qubits).
StateVector run_circuit(const Circuit& c, const StateVector& input);

/// In-place variant of run_circuit.
void run_circuit_inplace(const Circuit& c, StateVector& s);

/// Dense unitary of the whole circuit, column j = circuit applied to |j>.
/// Limited to 12 total qubits.
Matrix circuit_matrix(const Circuit& c);

enum class EquivMode { Exact, GlobalPhase };

/// Exact: max-entry |a-b| < eps. GlobalPhase: |a - lambda*b| < eps for a unit
/// lambda taken from the entry pair of largest modulus.
bool equivalent(const Matrix& a, const Matrix& b, EquivMode mode, double eps = kMatTol);

struct GateCensus {
    std::map<std::string, std::int64_t> per_mnemonic;
    std::int64_t elementary = 0;     // one-qubit gates and 1-control cx
    std::int64_t non_elementary = 0; // cx with 2 or more controls
    std::int64_t total = 0;
};
GateCensus gate_census(const Circuit& c);

/// Action on the num_qubits sector with all work qubits held at |0>.
/// Reports the largest amplitude leaked outside that sector over all basis
/// inputs through max_leak when non-null (restored work qubits leak ~0).
Matrix work_zero_action(const Circuit& c, double* max_leak = nullptr);

/// Action on the first num_qubits-1 qubits when the last main qubit is
/// prepared in |-> = (|0>-|1>)/sqrt(2) and work qubits in |0>, as oracle
/// circuits expect. max_leak reports deviation from the (phase oracle)x|->
/// product form.
Matrix minus_target_action(const Circuit& c, double* max_leak = nullptr);

} // namespace qsearch
