#include "qsearch/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace qsearch {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

int parse_int(std::string_view token, int line_no, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
        throw ParseError(line_no, std::string("expected non-negative integer for ") + what +
                                      ", got '" + std::string(token) + "'");
    return value;
}

int parse_index(std::string_view token, int line_no, int total_qubits) {
    const int idx = parse_int(token, line_no, "qubit index");
    if (idx >= total_qubits)
        throw ParseError(line_no, "qubit index " + std::to_string(idx) +
                                      " out of declared range (total " +
                                      std::to_string(total_qubits) + ")");
    return idx;
}

cplx parse_phase(std::string_view token, int line_no) {
    if (token == "i") return {0.0, 1.0};
    if (token == "-i") return {0.0, -1.0};
    if (token == "-1") return {-1.0, 0.0};
    if (token == "1") return {1.0, 0.0};
    throw ParseError(line_no, "gphase argument must be one of i, -1, -i, 1");
}

std::string phase_token(cplx phase) {
    const cplx candidates[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const char* names[] = {"1", "i", "-1", "-i"};
    for (int i = 0; i < 4; ++i)
        if (std::abs(phase - candidates[i]) <= kAmpTol) return names[i];
    throw std::invalid_argument("global phase not representable in circuit text");
}

void check_cx_shape(const std::vector<int>& controls, int target, int total, int line_no) {
    auto fail = [&](const std::string& msg) {
        if (line_no > 0) throw ParseError(line_no, msg);
        throw std::invalid_argument(msg);
    };
    if (controls.empty()) fail("controlled x needs at least one control");
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (controls[i] < 0 || controls[i] >= total) fail("control index out of range");
        for (std::size_t j = i + 1; j < controls.size(); ++j)
            if (controls[i] == controls[j])
                fail("duplicate control qubit " + std::to_string(controls[i]));
    }
    if (target < 0 || target >= total) fail("target index out of range");
    if (std::find(controls.begin(), controls.end(), target) != controls.end())
        fail("target qubit " + std::to_string(target) + " overlaps a control");
}

} // namespace

ParseError::ParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool saw_qubits = false;
    bool saw_work = false;
    bool saw_gate = false;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;

        const std::string_view op = tokens[0];
        if (!saw_qubits) {
            if (op != "qubits")
                throw ParseError(line_no, "first statement must be 'qubits <m>'");
            if (tokens.size() != 2) throw ParseError(line_no, "usage: qubits <m>");
            c.num_qubits = parse_int(tokens[1], line_no, "qubit count");
            if (c.num_qubits < 1) throw ParseError(line_no, "qubit count must be at least 1");
            saw_qubits = true;
            continue;
        }
        if (op == "qubits") throw ParseError(line_no, "duplicate 'qubits' header");
        if (op == "work") {
            if (saw_work) throw ParseError(line_no, "duplicate 'work' header");
            if (saw_gate) throw ParseError(line_no, "'work' must precede gate statements");
            if (tokens.size() != 2) throw ParseError(line_no, "usage: work <k>");
            c.num_work_qubits = parse_int(tokens[1], line_no, "work qubit count");
            saw_work = true;
            continue;
        }

        saw_gate = true;
        const int total = c.total_qubits();
        Gate g;
        if (op == "x" || op == "h" || op == "s" || op == "t" || op == "tdg") {
            if (tokens.size() != 2)
                throw ParseError(line_no, "usage: " + std::string(op) + " <q>");
            g.kind = op == "x"   ? GateKind::X
                     : op == "h" ? GateKind::H
                     : op == "s" ? GateKind::S
                     : op == "t" ? GateKind::T
                                 : GateKind::Tdg;
            g.target = parse_index(tokens[1], line_no, total);
        } else if (op == "cx" || op == "ccx" || op == "ncx") {
            const std::size_t want = op == "cx" ? 3 : op == "ccx" ? 4 : 0;
            if (want != 0 && tokens.size() != want)
                throw ParseError(line_no, "usage: " + std::string(op) + " <controls...> <t>");
            if (op == "ncx" && tokens.size() < 3)
                throw ParseError(line_no, "ncx needs at least one control and a target");
            g.kind = GateKind::CX;
            for (std::size_t i = 1; i + 1 < tokens.size(); ++i)
                g.controls.push_back(parse_index(tokens[i], line_no, total));
            g.target = parse_index(tokens.back(), line_no, total);
            check_cx_shape(g.controls, g.target, total, line_no);
        } else if (op == "gphase") {
            if (tokens.size() != 2) throw ParseError(line_no, "usage: gphase <i|-1|-i|1>");
            g.kind = GateKind::GPhase;
            g.phase = parse_phase(tokens[1], line_no);
        } else {
            throw ParseError(line_no, "unknown mnemonic '" + std::string(op) + "'");
        }
        c.ops.push_back(std::move(g));
    }
    if (!saw_qubits) throw ParseError(line_no, "missing 'qubits <m>' header");
    return c;
}

std::string serialize_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qubits " << c.num_qubits << "\n";
    if (c.num_work_qubits > 0) out << "work " << c.num_work_qubits << "\n";
    for (const Gate& g : c.ops) {
        switch (g.kind) {
        case GateKind::GPhase:
            out << "gphase " << phase_token(g.phase) << "\n";
            break;
        case GateKind::CX:
            out << mnemonic(GateKind::CX, static_cast<int>(g.controls.size()));
            for (int ctrl : g.controls) out << ' ' << ctrl;
            out << ' ' << g.target << "\n";
            break;
        default:
            out << mnemonic(g.kind) << ' ' << g.target << "\n";
            break;
        }
    }
    return out.str();
}

void run_circuit_inplace(const Circuit& c, StateVector& s) {
    if (s.num_qubits != c.total_qubits())
        throw std::invalid_argument("run_circuit: state/circuit dimension mismatch");
    for (const Gate& g : c.ops) {
        switch (g.kind) {
        case GateKind::CX:
            apply_controlled_x(s, g.controls, g.target);
            break;
        case GateKind::GPhase:
            apply_global_phase(s, g.phase);
            break;
        default:
            apply_gate(s, g.kind, g.target);
            break;
        }
    }
}

StateVector run_circuit(const Circuit& c, const StateVector& input) {
    StateVector s = input;
    run_circuit_inplace(c, s);
    return s;
}

Matrix circuit_matrix(const Circuit& c) {
    const int total = c.total_qubits();
    if (total > 12) throw std::invalid_argument("too many qubits for a dense circuit matrix (limit 12)");
    const int dim = 1 << total;
    Matrix m(dim, dim);
    for (int j = 0; j < dim; ++j) {
        StateVector col = run_circuit(c, StateVector::basis(total, j));
        for (int i = 0; i < dim; ++i) m(i, j) = col.amps[i];
    }
    return m;
}

bool equivalent(const Matrix& a, const Matrix& b, EquivMode mode, double eps) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("equivalent: shapes differ");
    if (mode == EquivMode::Exact) return max_abs_diff(a, b) < eps;

    // witness phase from the first entry pair of largest combined modulus
    double best = -1.0;
    cplx wa{}, wb{};
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const double weight = std::norm(a(i, j)) + std::norm(b(i, j));
            if (weight > best) {
                best = weight;
                wa = a(i, j);
                wb = b(i, j);
            }
        }
    cplx lambda{1.0, 0.0};
    const cplx prod = wa * std::conj(wb);
    if (std::abs(prod) > 0.0) lambda = prod / std::abs(prod);
    return max_abs_diff(a, lambda * b) < eps;
}

GateCensus gate_census(const Circuit& c) {
    GateCensus census;
    for (const Gate& g : c.ops) {
        const int controls = static_cast<int>(g.controls.size());
        census.per_mnemonic[mnemonic(g.kind, controls)] += 1;
        if (g.kind == GateKind::CX && controls >= 2)
            census.non_elementary += 1;
        else
            census.elementary += 1;
    }
    census.total = static_cast<std::int64_t>(c.ops.size());
    return census;
}

Matrix work_zero_action(const Circuit& c, double* max_leak) {
    if (c.num_qubits > 12)
        throw std::invalid_argument("too many qubits for a dense sector matrix (limit 12)");
    const int total = c.total_qubits();
    const int w = c.num_work_qubits;
    const std::uint64_t dim = std::uint64_t{1} << c.num_qubits;
    Matrix m(static_cast<int>(dim), static_cast<int>(dim));
    double leak = 0.0;
    const std::uint64_t work_mask = (std::uint64_t{1} << w) - 1;
    for (std::uint64_t j = 0; j < dim; ++j) {
        StateVector out = run_circuit(c, StateVector::basis(total, j << w));
        for (std::uint64_t full = 0; full < out.dim(); ++full) {
            if ((full & work_mask) == 0)
                m(static_cast<int>(full >> w), static_cast<int>(j)) = out.amps[full];
            else
                leak = std::max(leak, std::abs(out.amps[full]));
        }
    }
    if (max_leak) *max_leak = leak;
    return m;
}

Matrix minus_target_action(const Circuit& c, double* max_leak) {
    if (c.num_qubits < 2)
        throw std::invalid_argument("minus_target_action needs a register and a target qubit");
    const int reg = c.num_qubits - 1;
    if (reg > 12)
        throw std::invalid_argument("too many qubits for a dense sector matrix (limit 12)");
    const int total = c.total_qubits();
    const int w = c.num_work_qubits;
    const std::uint64_t dim = std::uint64_t{1} << reg;
    Matrix m(static_cast<int>(dim), static_cast<int>(dim));
    double leak = 0.0;
    for (std::uint64_t j = 0; j < dim; ++j) {
        StateVector in(total);
        in.amps[(j << 1) << w] = kInvSqrt2;
        in.amps[((j << 1) | 1) << w] = -kInvSqrt2;
        StateVector out = run_circuit(c, in);
        // project each register component onto |-> (x) |0...0>
        StateVector residue = out;
        for (std::uint64_t i = 0; i < dim; ++i) {
            const std::uint64_t i0 = (i << 1) << w;
            const std::uint64_t i1 = ((i << 1) | 1) << w;
            const cplx coeff = (out.amps[i0] - out.amps[i1]) * kInvSqrt2;
            m(static_cast<int>(i), static_cast<int>(j)) = coeff;
            residue.amps[i0] -= coeff * kInvSqrt2;
            residue.amps[i1] += coeff * kInvSqrt2;
        }
        for (const cplx& a : residue.amps) leak = std::max(leak, std::abs(a));
    }
    if (max_leak) *max_leak = leak;
    return m;
}

} // namespace qsearch
