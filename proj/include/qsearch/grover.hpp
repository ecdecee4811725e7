#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qsearch/compile.hpp"

namespace qsearch {

// splitmix64 (Vigna's constants): portable 64-bit generator, identical
// sequence for a given seed on every platform.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0, 1) from the top 53 bits
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class Engine { Analytic, Statevector, Compiled };

struct GroverConfig {
    int n = 0;
    std::uint64_t target = 0;
    Engine engine = Engine::Statevector;
    LoweringLevel level = LoweringLevel::Universal; // compiled engine only
    std::optional<int> iterations_override;
    int shots = 1024;
    std::uint64_t seed = 0;
};

// Components of the state after k iterations in the plane spanned by the
// non-solution uniform state |u> and the solution |i0>.
struct TraceRow {
    int k = 0;
    double c_u = 0.0;
    double c_i0 = 0.0;
    double residual = 0.0; // mass outside span{|u>, |i0>}
    double p = 0.0;        // success probability after k iterations
};

struct SearchReport {
    double theta = 0.0;
    int k0 = 0; // iterations actually run
    double p_analytic = 0.0;
    double p_engine = 0.0;
    std::vector<TraceRow> trace; // rows k = 0 .. k0
    std::map<std::uint64_t, std::int64_t> histogram;
    std::optional<std::uint64_t> measured_mode;
};

/// Rotation angle per iteration, 2*arccos(sqrt(1 - 2^-n)).
double theta(int n);

/// round((pi - theta)/(2*theta)), halves away from zero.
int optimal_iterations(int n);

/// sin^2((2k+1)/2 * theta).
double success_probability(int n, int k);

/// (c_u, c_i0) = (cos((2k+1)/2 theta), sin((2k+1)/2 theta)).
std::pair<double, double> analytic_state(int n, int k);

/// Negates the amplitude at i0 (the phase oracle I - 2|i0><i0|).
void apply_oracle_phase(StateVector& s, std::uint64_t i0);

/// Inversion about the mean: every amplitude a -> 2*mean - a, in O(2^n).
void apply_diffusion(StateVector& s);

/// Samples a basis index with probability |amps_i|^2 by inverse CDF.
/// Requires |norm - 1| <= 1e-6.
std::uint64_t measure(const StateVector& s, SplitMix64& rng);

SearchReport run_search(const GroverConfig& config);

struct SweepRow {
    int n = 0;
    double theta = 0.0;
    int k0 = 0;
    double p_analytic = 0.0;
    std::optional<double> p_engine; // empty when the engine cannot reach n
};

/// One row per n in [n_min, n_max] (2 <= n_min <= n_max <= 30).
std::vector<SweepRow> sweep(int n_min, int n_max, Engine engine);

/// Capacity limits: analytic n <= 30, statevector n <= 24, compiled circuits
/// must fit 12 qubits including the oracle target and work register.
bool engine_feasible(Engine engine, int n, LoweringLevel level = LoweringLevel::Universal);

} // namespace qsearch
