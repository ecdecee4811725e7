#include "qsearch/compile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsearch {

namespace {

Gate one_qubit(GateKind kind, int q) {
    Gate g;
    g.kind = kind;
    g.target = q;
    return g;
}

Gate controlled_x(std::vector<int> controls, int target) {
    Gate g;
    g.kind = GateKind::CX;
    g.controls = std::move(controls);
    g.target = target;
    return g;
}

Gate global_phase(cplx factor) {
    Gate g;
    g.kind = GateKind::GPhase;
    g.phase = factor;
    return g;
}

std::vector<int> range_upto(int count) {
    std::vector<int> v(count);
    for (int i = 0; i < count; ++i) v[i] = i;
    return v;
}

// 2|0><0| - I: fixes |0...0>, negates every other basis state. The two
// gphase i factors make the overall sign come out exact.
void emit_zero_reflection(Circuit& c, int n) {
    for (int q = 0; q < n; ++q) c.ops.push_back(one_qubit(GateKind::X, q));
    c.ops.push_back(global_phase({0.0, 1.0}));
    c.ops.push_back(one_qubit(GateKind::H, n - 1));
    if (n >= 2)
        c.ops.push_back(controlled_x(range_upto(n - 1), n - 1));
    else
        c.ops.push_back(one_qubit(GateKind::X, 0));
    c.ops.push_back(one_qubit(GateKind::H, n - 1));
    c.ops.push_back(global_phase({0.0, 1.0}));
    for (int q = 0; q < n; ++q) c.ops.push_back(one_qubit(GateKind::X, q));
}

void append_ops(Circuit& dst, const Circuit& src) {
    dst.ops.insert(dst.ops.end(), src.ops.begin(), src.ops.end());
}

} // namespace

Circuit build_oracle_circuit(int n, std::uint64_t i0) {
    if (n < 1) throw std::invalid_argument("oracle needs at least one search qubit");
    if (i0 >= (std::uint64_t{1} << n)) throw std::out_of_range("target out of range");
    Circuit c;
    c.num_qubits = n + 1;
    std::vector<int> flipped;
    for (int q = 0; q < n; ++q)
        if (((i0 >> (n - 1 - q)) & 1) == 0) flipped.push_back(q);
    for (int q : flipped) c.ops.push_back(one_qubit(GateKind::X, q));
    c.ops.push_back(controlled_x(range_upto(n), n));
    for (int q : flipped) c.ops.push_back(one_qubit(GateKind::X, q));
    return c;
}

Circuit build_diffusion_circuit(int n) {
    if (n < 1) throw std::invalid_argument("diffusion needs at least one qubit");
    Circuit c;
    c.num_qubits = n;
    for (int q = 0; q < n; ++q) c.ops.push_back(one_qubit(GateKind::H, q));
    emit_zero_reflection(c, n);
    for (int q = 0; q < n; ++q) c.ops.push_back(one_qubit(GateKind::H, q));
    return c;
}

Circuit lower_mcx(const std::vector<int>& controls, int target, int work_base) {
    const int c = static_cast<int>(controls.size());
    if (c < 1) throw std::invalid_argument("lower_mcx needs at least one control");
    for (int q : controls)
        if (q >= work_base) throw std::invalid_argument("control index reaches into work register");
    if (target >= work_base) throw std::invalid_argument("target index reaches into work register");

    Circuit out;
    out.num_qubits = work_base;
    out.num_work_qubits = c >= 3 ? c - 2 : 0;
    if (c == 1) {
        out.ops.push_back(controlled_x({controls[0]}, target));
        return out;
    }
    if (c == 2) {
        out.ops.push_back(controlled_x({controls[0], controls[1]}, target));
        return out;
    }
    std::vector<Gate> ladder;
    ladder.push_back(controlled_x({controls[0], controls[1]}, work_base));
    for (int i = 2; i < c - 1; ++i)
        ladder.push_back(controlled_x({controls[i], work_base + i - 2}, work_base + i - 1));
    out.ops = ladder;
    out.ops.push_back(controlled_x({controls[c - 1], work_base + c - 3}, target));
    out.ops.insert(out.ops.end(), ladder.rbegin(), ladder.rend());
    return out;
}

Circuit lower_toffoli() {
    Circuit c;
    c.num_qubits = 3;
    c.ops = {
        one_qubit(GateKind::H, 2),
        controlled_x({1}, 2),
        one_qubit(GateKind::Tdg, 2),
        controlled_x({0}, 2),
        one_qubit(GateKind::T, 2),
        controlled_x({1}, 2),
        one_qubit(GateKind::Tdg, 2),
        controlled_x({0}, 2),
        one_qubit(GateKind::T, 1),
        one_qubit(GateKind::T, 2),
        one_qubit(GateKind::H, 2),
        controlled_x({0}, 1),
        one_qubit(GateKind::T, 0),
        one_qubit(GateKind::Tdg, 1),
        controlled_x({0}, 1),
    };
    return c;
}

Circuit lower_to_toffoli(const Circuit& c) {
    const int work_base = c.total_qubits();
    int extra = 0;
    for (const Gate& g : c.ops)
        if (g.kind == GateKind::CX && g.controls.size() >= 3)
            extra = std::max(extra, static_cast<int>(g.controls.size()) - 2);

    Circuit out;
    out.num_qubits = c.num_qubits;
    out.num_work_qubits = c.num_work_qubits + extra;
    for (const Gate& g : c.ops) {
        if (g.kind == GateKind::CX && g.controls.size() >= 3)
            append_ops(out, lower_mcx(g.controls, g.target, work_base));
        else
            out.ops.push_back(g);
    }
    return out;
}

Circuit lower_to_universal(const Circuit& c) {
    const Circuit mid = lower_to_toffoli(c);
    Circuit out;
    out.num_qubits = mid.num_qubits;
    out.num_work_qubits = mid.num_work_qubits;
    const Circuit block = lower_toffoli();
    for (const Gate& g : mid.ops) {
        if (g.kind == GateKind::CX && g.controls.size() == 2) {
            const int map[3] = {g.controls[0], g.controls[1], g.target};
            for (Gate b : block.ops) {
                b.target = map[b.target];
                for (int& ctrl : b.controls) ctrl = map[ctrl];
                out.ops.push_back(std::move(b));
            }
        } else {
            out.ops.push_back(g);
        }
    }
    return out;
}

GroverBlocks grover_blocks(int n, std::uint64_t i0, LoweringLevel level) {
    if (n < 1) throw std::invalid_argument("search register needs at least one qubit");
    if (i0 >= (std::uint64_t{1} << n)) throw std::out_of_range("target out of range");

    GroverBlocks blocks;
    blocks.prep.num_qubits = n + 1;
    blocks.prep.ops.push_back(one_qubit(GateKind::X, n));
    for (int q = 0; q <= n; ++q) blocks.prep.ops.push_back(one_qubit(GateKind::H, q));

    blocks.oracle = build_oracle_circuit(n, i0);

    blocks.diffusion = build_diffusion_circuit(n);
    blocks.diffusion.num_qubits = n + 1; // widen to the shared layout

    if (level != LoweringLevel::Operator) {
        auto lower = level == LoweringLevel::Toffoli ? lower_to_toffoli : lower_to_universal;
        blocks.oracle = lower(blocks.oracle);
        blocks.diffusion = lower(blocks.diffusion);
    }
    const int work = std::max(blocks.oracle.num_work_qubits, blocks.diffusion.num_work_qubits);
    blocks.prep.num_work_qubits = work;
    blocks.oracle.num_work_qubits = work;
    blocks.diffusion.num_work_qubits = work;
    return blocks;
}

Circuit assemble_grover_circuit(int n, std::uint64_t i0, int k, LoweringLevel level) {
    if (k < 0) throw std::invalid_argument("iteration count must be non-negative");
    const GroverBlocks blocks = grover_blocks(n, i0, level);
    Circuit out;
    out.num_qubits = n + 1;
    out.num_work_qubits = blocks.prep.num_work_qubits;
    append_ops(out, blocks.prep);
    for (int rep = 0; rep < k; ++rep) {
        append_ops(out, blocks.oracle);
        append_ops(out, blocks.diffusion);
    }
    return out;
}

double predicted_gate_count(int n) {
    if (n < 2) throw std::invalid_argument("gate count model needs n >= 2");
    return kPi * (17.0 * n - 15.0) * std::sqrt(std::ldexp(1.0, n)) + n + 2;
}

} // namespace qsearch
