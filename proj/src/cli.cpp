#include "qsearch/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace qsearch {

namespace {

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string deg1(double radians) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.1f", radians * 180.0 / kPi);
    return buf;
}

const char* engine_name(Engine e) {
    switch (e) {
    case Engine::Analytic: return "analytic";
    case Engine::Statevector: return "statevector";
    case Engine::Compiled: return "compiled";
    }
    return "?";
}

struct RunFlags {
    int n = 0;
    std::uint64_t target = 0;
    std::string engine = "statevector";
    std::string level = "universal";
    std::optional<int> iterations;
    int shots = 1024;
    std::uint64_t seed = 0;
    std::string json_path;
};

struct SweepFlags {
    int n_min = 0;
    int n_max = 0;
    std::string engine = "analytic";
    std::string out_path;
};

struct CompileFlags {
    int n = 0;
    std::uint64_t target = 0;
    std::string level;
    std::string out_path;
};

Engine parse_engine(const std::string& name) {
    if (name == "analytic") return Engine::Analytic;
    if (name == "statevector") return Engine::Statevector;
    if (name == "compiled") return Engine::Compiled;
    throw std::invalid_argument("unknown engine '" + name + "'");
}

LoweringLevel parse_level(const std::string& name) {
    if (name == "operator") return LoweringLevel::Operator;
    if (name == "toffoli") return LoweringLevel::Toffoli;
    if (name == "universal") return LoweringLevel::Universal;
    throw std::invalid_argument("unknown lowering level '" + name + "'");
}

int write_text(const std::string& path, const std::string& text, std::ostream& out,
               std::ostream& err) {
    if (path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "cannot open output file '" << path << "'\n";
        return 1;
    }
    file << text;
    return 0;
}

int cmd_run(const RunFlags& flags, std::ostream& out, std::ostream& err) {
    GroverConfig cfg;
    cfg.n = flags.n;
    cfg.target = flags.target;
    cfg.engine = parse_engine(flags.engine);
    cfg.level = parse_level(flags.level);
    cfg.iterations_override = flags.iterations;
    cfg.shots = flags.shots;
    cfg.seed = flags.seed;
    const SearchReport report = run_search(cfg);

    out << "n: " << cfg.n << "\n";
    out << "target: " << cfg.target << "\n";
    out << "engine: " << engine_name(cfg.engine) << "\n";
    out << "theta_rad: " << g17(report.theta) << "\n";
    out << "theta_deg: " << deg1(report.theta) << "\n";
    out << "k0: " << report.k0 << "\n";
    out << "p_analytic: " << g17(report.p_analytic) << "\n";
    out << "p_engine: " << g17(report.p_engine) << "\n";
    out << "shots: " << cfg.shots << "\n";
    out << "histogram:\n";
    for (const auto& [index, count] : report.histogram)
        out << "  " << index << ": " << count << "\n";
    out << "measured_mode: ";
    if (report.measured_mode)
        out << *report.measured_mode << "\n";
    else
        out << "none\n";

    if (!flags.json_path.empty()) {
        nlohmann::json record;
        record["n"] = cfg.n;
        record["target"] = cfg.target;
        record["engine"] = engine_name(cfg.engine);
        record["theta_rad"] = report.theta;
        record["k0"] = report.k0;
        record["p_analytic"] = report.p_analytic;
        record["p_engine"] = report.p_engine;
        record["shots"] = cfg.shots;
        record["seed"] = cfg.seed;
        auto& trace = record["trace"] = nlohmann::json::array();
        for (const TraceRow& row : report.trace)
            trace.push_back({{"k", row.k},
                             {"c_u", row.c_u},
                             {"c_i0", row.c_i0},
                             {"residual", row.residual},
                             {"p", row.p}});
        auto& hist = record["histogram"] = nlohmann::json::object();
        for (const auto& [index, count] : report.histogram)
            hist[std::to_string(index)] = count;
        if (report.measured_mode) record["measured_mode"] = *report.measured_mode;
        return write_text(flags.json_path, record.dump(2) + "\n", out, err);
    }
    return 0;
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out, std::ostream& err) {
    const auto rows = sweep(flags.n_min, flags.n_max, parse_engine(flags.engine));
    std::ostringstream csv;
    csv << "n,theta_rad,k0,p_analytic,p_engine\n";
    for (const SweepRow& row : rows) {
        csv << row.n << ',' << g17(row.theta) << ',' << row.k0 << ',' << g17(row.p_analytic)
            << ',';
        if (row.p_engine) csv << g17(*row.p_engine);
        csv << "\n";
    }
    return write_text(flags.out_path, csv.str(), out, err);
}

int cmd_compile(const CompileFlags& flags, std::ostream& out, std::ostream& err) {
    if (flags.n < 1 || flags.n > 30) throw std::invalid_argument("n must be between 1 and 30");
    const Circuit circuit =
        assemble_grover_circuit(flags.n, flags.target, optimal_iterations(flags.n),
                                parse_level(flags.level));
    const GateCensus census = gate_census(circuit);

    std::ostringstream text;
    text << serialize_circuit(circuit);
    text << "# gates:";
    for (const auto& [name, count] : census.per_mnemonic) text << ' ' << name << '=' << count;
    text << " (elementary " << census.elementary << ", non-elementary " << census.non_elementary
         << ")\n";
    if (flags.n >= 2) text << "# predicted: " << g17(predicted_gate_count(flags.n)) << "\n";
    return write_text(flags.out_path, text.str(), out, err);
}

} // namespace

int run_verification(int n, std::uint64_t target, std::ostream& out, const VerifyHooks& hooks) {
    const auto toffoli = hooks.toffoli ? hooks.toffoli : [] { return lower_toffoli(); };
    const auto oracle = hooks.oracle
                            ? hooks.oracle
                            : [](int nn, std::uint64_t i0) { return build_oracle_circuit(nn, i0); };
    const auto diffusion =
        hooks.diffusion ? hooks.diffusion : [](int nn) { return build_diffusion_circuit(nn); };

    bool all_ok = true;
    const auto check = [&](const std::string& name, bool ok) {
        out << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
        all_ok = all_ok && ok;
    };

    check("toffoli decomposition",
          equivalent(circuit_matrix(toffoli()), gate_matrix(GateKind::CX, 2), EquivMode::Exact));

    {
        double leak = 0.0;
        const Matrix action = minus_target_action(oracle(n, target), &leak);
        const Matrix expected =
            Matrix::identity(1 << n) -
            cplx{2.0, 0.0} * outer(StateVector::basis(n, target), StateVector::basis(n, target));
        check("oracle identity (n=" + std::to_string(n) + ", target=" + std::to_string(target) + ")",
              leak < kMatTol && equivalent(action, expected, EquivMode::Exact));
    }
    {
        const StateVector psi = StateVector::uniform(n);
        const Matrix expected =
            cplx{2.0, 0.0} * outer(psi, psi) - Matrix::identity(1 << n);
        check("diffusion identity (n=" + std::to_string(n) + ")",
              equivalent(circuit_matrix(diffusion(n)), expected, EquivMode::Exact));
    }
    {
        double leak_op = 0.0, leak_toff = 0.0, leak_uni = 0.0;
        const Matrix op = work_zero_action(
            assemble_grover_circuit(n, target, 1, LoweringLevel::Operator), &leak_op);
        const Matrix toff = work_zero_action(
            assemble_grover_circuit(n, target, 1, LoweringLevel::Toffoli), &leak_toff);
        const Matrix uni = work_zero_action(
            assemble_grover_circuit(n, target, 1, LoweringLevel::Universal), &leak_uni);
        const bool ok = leak_op < kMatTol && leak_toff < kMatTol && leak_uni < kMatTol &&
                        equivalent(op, toff, EquivMode::GlobalPhase) &&
                        equivalent(op, uni, EquivMode::GlobalPhase);
        check("level equivalence (n=" + std::to_string(n) + ", target=" + std::to_string(target) +
                  ")",
              ok);
    }

    out << (all_ok ? "all checks passed" : "verification FAILED") << "\n";
    return all_ok ? 0 : 2;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover search simulator, compiler and verifier"};
    app.require_subcommand(1);

    RunFlags run_flags;
    int run_iterations = -1;
    CLI::App* run_cmd = app.add_subcommand("run", "simulate one search");
    run_cmd->add_option("--n", run_flags.n, "search register size in qubits")->required();
    run_cmd->add_option("--target", run_flags.target, "searched index")->required();
    run_cmd->add_option("--engine", run_flags.engine, "analytic|statevector|compiled");
    run_cmd->add_option("--level", run_flags.level, "operator|toffoli|universal");
    run_cmd->add_option("--iterations", run_iterations, "override the iteration count");
    run_cmd->add_option("--shots", run_flags.shots, "sample count");
    run_cmd->add_option("--seed", run_flags.seed, "sampler seed");
    run_cmd->add_option("--json", run_flags.json_path, "write a machine-readable record");

    SweepFlags sweep_flags;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "per-n probability table as CSV");
    sweep_cmd->add_option("--n-min", sweep_flags.n_min, "first n")->required();
    sweep_cmd->add_option("--n-max", sweep_flags.n_max, "last n")->required();
    sweep_cmd->add_option("--engine", sweep_flags.engine, "analytic|statevector|compiled");
    sweep_cmd->add_option("--out", sweep_flags.out_path, "output path (default stdout)");

    CompileFlags compile_flags;
    CLI::App* compile_cmd = app.add_subcommand("compile", "emit the search circuit as text");
    compile_cmd->add_option("--n", compile_flags.n, "search register size in qubits")->required();
    compile_cmd->add_option("--target", compile_flags.target, "searched index")->required();
    compile_cmd->add_option("--level", compile_flags.level, "operator|toffoli|universal")
        ->required();
    compile_cmd->add_option("--out", compile_flags.out_path, "output path (default stdout)");

    int verify_n = 0;
    std::uint64_t verify_target = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the equivalence suite");
    verify_cmd->add_option("--n", verify_n, "search register size in qubits")->required();
    verify_cmd->add_option("--target", verify_target, "searched index")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (run_cmd->parsed()) {
            if (run_cmd->count("--iterations") > 0) run_flags.iterations = run_iterations;
            return cmd_run(run_flags, out, err);
        }
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_flags, out, err);
        if (compile_cmd->parsed()) return cmd_compile(compile_flags, out, err);
        if (verify_cmd->parsed()) {
            if (verify_n < 1) throw std::invalid_argument("n must be at least 1");
            if (verify_n > 5) throw std::invalid_argument("matrix verification limited to n <= 5");
            if (verify_target >= (std::uint64_t{1} << verify_n))
                throw std::out_of_range("target out of range");
            return run_verification(verify_n, verify_target, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace qsearch
