#include "qsearch/gates.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace qsearch {

namespace {

// qubit 0 is the most significant bit of the basis index
std::uint64_t qubit_mask(const StateVector& s, int q) {
    if (q < 0 || q >= s.num_qubits) throw std::out_of_range("qubit index out of range");
    return std::uint64_t{1} << (s.num_qubits - 1 - q);
}

Matrix two_by_two(cplx a, cplx b, cplx c, cplx d) {
    Matrix m(2, 2);
    m(0, 0) = a; m(0, 1) = b;
    m(1, 0) = c; m(1, 1) = d;
    return m;
}

constexpr cplx kPhaseS{0.0, 1.0};
constexpr cplx kPhaseT{kInvSqrt2, kInvSqrt2};
constexpr cplx kPhaseTdg{kInvSqrt2, -kInvSqrt2};

// diagonal phase on the |1> half of qubit q
void apply_phase_on_one(StateVector& s, int q, cplx phase) {
    const std::uint64_t mask = qubit_mask(s, q);
    for (std::uint64_t i = 0; i < s.dim(); ++i)
        if (i & mask) s.amps[i] *= phase;
}

void apply_x(StateVector& s, int q) {
    const std::uint64_t mask = qubit_mask(s, q);
    for (std::uint64_t i = 0; i < s.dim(); ++i)
        if (!(i & mask)) std::swap(s.amps[i], s.amps[i | mask]);
}

} // namespace

std::string mnemonic(GateKind kind, int num_controls) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::GPhase: return "gphase";
    case GateKind::CX:
        if (num_controls == 1) return "cx";
        if (num_controls == 2) return "ccx";
        return "ncx";
    }
    throw std::invalid_argument("unknown gate kind");
}

Matrix gate_matrix(GateKind kind, int num_controls, cplx phase) {
    switch (kind) {
    case GateKind::X: return two_by_two(0, 1, 1, 0);
    case GateKind::H: return two_by_two(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    case GateKind::S: return two_by_two(1, 0, 0, kPhaseS);
    case GateKind::T: return two_by_two(1, 0, 0, kPhaseT);
    case GateKind::Tdg: return two_by_two(1, 0, 0, kPhaseTdg);
    case GateKind::GPhase: {
        Matrix m(1, 1);
        m(0, 0) = phase;
        return m;
    }
    case GateKind::CX: {
        if (num_controls < 1) throw std::invalid_argument("cx needs at least one control");
        if (num_controls > 11) throw std::invalid_argument("dense cx matrix limited to 11 controls");
        const int dim = 1 << (num_controls + 1);
        Matrix m = Matrix::identity(dim);
        // swap the last two basis states |1...10> <-> |1...11>
        m(dim - 2, dim - 2) = 0.0;
        m(dim - 1, dim - 1) = 0.0;
        m(dim - 2, dim - 1) = 1.0;
        m(dim - 1, dim - 2) = 1.0;
        return m;
    }
    }
    throw std::invalid_argument("unknown gate kind");
}

void apply_one_qubit(StateVector& s, int q, const Matrix& u) {
    const std::uint64_t mask = qubit_mask(s, q);
    if (u.rows() != 2 || u.cols() != 2)
        throw std::invalid_argument("apply_one_qubit: matrix is not 2x2");
    assert(is_unitary(u, kMatTol)); // release builds trust the caller
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const std::uint64_t dim = s.dim();
    const std::uint64_t stride = mask << 1;
    for (std::uint64_t base = 0; base < dim; base += stride) {
        for (std::uint64_t i = base; i < base + mask; ++i) {
            const cplx a = s.amps[i];
            const cplx b = s.amps[i | mask];
            s.amps[i] = u00 * a + u01 * b;
            s.amps[i | mask] = u10 * a + u11 * b;
        }
    }
}

void apply_gate(StateVector& s, GateKind kind, int q) {
    switch (kind) {
    case GateKind::X: apply_x(s, q); return;
    case GateKind::H: apply_one_qubit(s, q, gate_matrix(GateKind::H)); return;
    case GateKind::S: apply_phase_on_one(s, q, kPhaseS); return;
    case GateKind::T: apply_phase_on_one(s, q, kPhaseT); return;
    case GateKind::Tdg: apply_phase_on_one(s, q, kPhaseTdg); return;
    default: throw std::invalid_argument("apply_gate: not a one-qubit gate");
    }
}

void apply_controlled_x(StateVector& s, std::span<const int> controls, int target) {
    if (controls.empty()) throw std::invalid_argument("controlled x needs at least one control");
    std::uint64_t cmask = 0;
    for (int c : controls) {
        const std::uint64_t bit = qubit_mask(s, c);
        if (cmask & bit) throw std::invalid_argument("duplicate control qubit");
        cmask |= bit;
    }
    const std::uint64_t tmask = qubit_mask(s, target);
    if (cmask & tmask) throw std::invalid_argument("target overlaps a control qubit");
    for (std::uint64_t i = 0; i < s.dim(); ++i)
        if ((i & cmask) == cmask && !(i & tmask)) std::swap(s.amps[i], s.amps[i | tmask]);
}

void apply_global_phase(StateVector& s, cplx factor) {
    if (std::abs(std::abs(factor) - 1.0) > kAmpTol)
        throw std::invalid_argument("global phase factor must have modulus 1");
    for (auto& a : s.amps) a *= factor;
}

} // namespace qsearch
