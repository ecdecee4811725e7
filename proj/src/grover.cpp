#include "qsearch/grover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsearch {

namespace {

double pow2(int n) { return std::ldexp(1.0, n); }

// work qubits needed by the compiled blocks (shared register, see lower_mcx)
int compiled_work_qubits(int n, LoweringLevel level) {
    if (level == LoweringLevel::Operator) return 0;
    return n >= 3 ? n - 2 : 0;
}

void validate(const GroverConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("n must be at least 1");
    if (!engine_feasible(cfg.engine, cfg.n, cfg.level))
        throw std::invalid_argument("n exceeds the selected engine's capacity");
    if (cfg.target >= (std::uint64_t{1} << cfg.n))
        throw std::out_of_range("target out of range");
    if (cfg.shots < 0) throw std::invalid_argument("shots must be non-negative");
    if (cfg.iterations_override && *cfg.iterations_override < 0)
        throw std::invalid_argument("iterations must be non-negative");
}

// components along |u> and |i0> for the analytic engine; the state is in the
// search plane by construction
TraceRow trace_from_components(int k, double c_u, double c_i0) {
    TraceRow row;
    row.k = k;
    row.c_u = c_u;
    row.c_i0 = c_i0;
    row.residual = 0.0;
    row.p = c_i0 * c_i0;
    return row;
}

// residual is measured directly as || v - c_u|u> - c_i0|i0> ||, not through
// 1 - c_u^2 - c_i0^2, which cancels catastrophically for in-plane states
TraceRow trace_register_state(int k, const StateVector& v, std::uint64_t i0) {
    const double inv_rest = 1.0 / std::sqrt(static_cast<double>(v.dim()) - 1.0);
    cplx sum_others{};
    for (std::uint64_t i = 0; i < v.dim(); ++i)
        if (i != i0) sum_others += v.amps[i];

    TraceRow row;
    row.k = k;
    row.c_u = sum_others.real() * inv_rest;
    row.c_i0 = v.amps[i0].real();
    double r2 = 0.0;
    for (std::uint64_t i = 0; i < v.dim(); ++i) {
        const double plane = i == i0 ? row.c_i0 : row.c_u * inv_rest;
        r2 += std::norm(v.amps[i] - plane);
    }
    row.residual = std::sqrt(r2);
    row.p = std::norm(v.amps[i0]);
    return row;
}

// components of the full compiled state against |u>(x)|->(x)|0..0> and
// |i0>(x)|->(x)|0..0>; low = 1 target qubit + work qubits
TraceRow trace_full_state(int k, const StateVector& v, int n, std::uint64_t i0) {
    const int low = v.num_qubits - n;
    const int w = low - 1;
    const double inv_rest = 1.0 / std::sqrt(pow2(n) - 1.0);
    cplx sum_others{}, on_target{};
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const cplx coeff =
            (v.amps[(i << 1) << w] - v.amps[((i << 1) | 1) << w]) * kInvSqrt2;
        if (i == i0)
            on_target = coeff;
        else
            sum_others += coeff;
    }

    TraceRow row;
    row.k = k;
    row.c_u = sum_others.real() * inv_rest;
    row.c_i0 = on_target.real();
    StateVector residue = v;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        const double plane = i == i0 ? row.c_i0 : row.c_u * inv_rest;
        residue.amps[(i << 1) << w] -= plane * kInvSqrt2;
        residue.amps[((i << 1) | 1) << w] += plane * kInvSqrt2;
    }
    row.residual = norm(residue);
    // success probability marginalized over the target and work qubits
    double p = 0.0;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << low); ++rest)
        p += std::norm(v.amps[(i0 << low) | rest]);
    row.p = p;
    return row;
}

void finish_histogram(SearchReport& report) {
    std::int64_t best = 0;
    for (const auto& [index, count] : report.histogram) {
        if (count > best) {
            best = count;
            report.measured_mode = index;
        }
    }
}

// inverse CDF of the analytic distribution: mass p_hit at i0, the remainder
// uniform over the other N-1 indices
std::uint64_t sample_analytic(double u, double p_hit, std::uint64_t dim, std::uint64_t i0) {
    const double q = (1.0 - p_hit) / static_cast<double>(dim - 1);
    const double before = static_cast<double>(i0) * q;
    if (u < before) {
        const auto idx = static_cast<std::uint64_t>(u / q);
        return std::min(idx, i0 - 1);
    }
    if (u < before + p_hit) return i0;
    const auto offset = static_cast<std::uint64_t>((u - before - p_hit) / q);
    return std::min(i0 + 1 + offset, dim - 1);
}

} // namespace

double theta(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    // same value as 2*arccos(sqrt(1 - 2^-n)); the atan2 form is well
    // conditioned at both ends and lands the n=1 half-integer tie exactly
    const double x = std::ldexp(1.0, -n);
    return 2.0 * std::atan2(std::sqrt(x), std::sqrt(1.0 - x));
}

int optimal_iterations(int n) {
    const double th = theta(n);
    return static_cast<int>(std::llround((kPi - th) / (2.0 * th)));
}

double success_probability(int n, int k) {
    const double s = std::sin((2.0 * k + 1.0) / 2.0 * theta(n));
    return s * s;
}

std::pair<double, double> analytic_state(int n, int k) {
    const double angle = (2.0 * k + 1.0) / 2.0 * theta(n);
    return {std::cos(angle), std::sin(angle)};
}

void apply_oracle_phase(StateVector& s, std::uint64_t i0) {
    if (i0 >= s.dim()) throw std::out_of_range("target out of range");
    s.amps[i0] = -s.amps[i0];
}

void apply_diffusion(StateVector& s) {
    cplx mean{};
    for (const cplx& a : s.amps) mean += a;
    mean /= static_cast<double>(s.dim());
    for (cplx& a : s.amps) a = 2.0 * mean - a;
}

std::uint64_t measure(const StateVector& s, SplitMix64& rng) {
    if (std::abs(norm(s) - 1.0) > 1e-6)
        throw std::invalid_argument("measure: state norm deviates from 1");
    const double u = rng.next_double();
    double acc = 0.0;
    for (std::uint64_t i = 0; i < s.dim(); ++i) {
        acc += std::norm(s.amps[i]);
        if (u < acc) return i;
    }
    return s.dim() - 1;
}

bool engine_feasible(Engine engine, int n, LoweringLevel level) {
    if (n < 1) return false;
    switch (engine) {
    case Engine::Analytic: return n <= 30;
    case Engine::Statevector: return n <= 24;
    case Engine::Compiled: return n + 1 + compiled_work_qubits(n, level) <= 12;
    }
    return false;
}

SearchReport run_search(const GroverConfig& cfg) {
    validate(cfg);
    const int k_total = cfg.iterations_override.value_or(optimal_iterations(cfg.n));

    SearchReport report;
    report.theta = theta(cfg.n);
    report.k0 = k_total;
    report.p_analytic = success_probability(cfg.n, k_total);

    SplitMix64 rng{cfg.seed};
    const std::uint64_t dim = std::uint64_t{1} << cfg.n;

    switch (cfg.engine) {
    case Engine::Analytic: {
        for (int k = 0; k <= k_total; ++k) {
            const auto [c_u, c_i0] = analytic_state(cfg.n, k);
            report.trace.push_back(trace_from_components(k, c_u, c_i0));
        }
        report.p_engine = report.trace.back().p;
        for (int shot = 0; shot < cfg.shots; ++shot)
            report.histogram[sample_analytic(rng.next_double(), report.p_engine, dim,
                                             cfg.target)] += 1;
        break;
    }
    case Engine::Statevector: {
        StateVector v = StateVector::uniform(cfg.n);
        report.trace.push_back(trace_register_state(0, v, cfg.target));
        for (int k = 1; k <= k_total; ++k) {
            apply_oracle_phase(v, cfg.target);
            apply_diffusion(v);
            report.trace.push_back(trace_register_state(k, v, cfg.target));
        }
        report.p_engine = std::norm(v.amps[cfg.target]);
        for (int shot = 0; shot < cfg.shots; ++shot)
            report.histogram[measure(v, rng)] += 1;
        break;
    }
    case Engine::Compiled: {
        const GroverBlocks blocks = grover_blocks(cfg.n, cfg.target, cfg.level);
        const int low = 1 + blocks.prep.num_work_qubits;
        StateVector v(blocks.prep.total_qubits());
        v.amps[0] = 1.0;
        run_circuit_inplace(blocks.prep, v);
        report.trace.push_back(trace_full_state(0, v, cfg.n, cfg.target));
        for (int k = 1; k <= k_total; ++k) {
            run_circuit_inplace(blocks.oracle, v);
            run_circuit_inplace(blocks.diffusion, v);
            report.trace.push_back(trace_full_state(k, v, cfg.n, cfg.target));
        }
        report.p_engine = report.trace.back().p;
        for (int shot = 0; shot < cfg.shots; ++shot)
            report.histogram[measure(v, rng) >> low] += 1;
        break;
    }
    }
    finish_histogram(report);
    return report;
}

std::vector<SweepRow> sweep(int n_min, int n_max, Engine engine) {
    if (n_min < 2 || n_min > n_max || n_max > 30)
        throw std::invalid_argument("sweep range must satisfy 2 <= n-min <= n-max <= 30");
    std::vector<SweepRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        SweepRow row;
        row.n = n;
        row.theta = theta(n);
        row.k0 = optimal_iterations(n);
        row.p_analytic = success_probability(n, row.k0);
        if (engine_feasible(engine, n)) {
            if (engine == Engine::Analytic) {
                row.p_engine = row.p_analytic;
            } else {
                GroverConfig cfg;
                cfg.n = n;
                cfg.target = 0;
                cfg.engine = engine;
                cfg.shots = 0;
                row.p_engine = run_search(cfg).p_engine;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace qsearch
