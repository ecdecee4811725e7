#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qsearch/grover.hpp"

namespace qsearch {

// Circuit builders the verification suite checks; tests override entries to
// exercise the failure path. Unset entries fall back to the real builders.
struct VerifyHooks {
    std::function<Circuit()> toffoli;
    std::function<Circuit(int, std::uint64_t)> oracle;
    std::function<Circuit(int)> diffusion;
};

/// Equivalence suite for one (n, target) pair: Toffoli lowering exactness,
/// oracle identity, diffusion identity, level equivalence. Prints one status
/// line per check; returns 0 when all pass, 2 otherwise.
int run_verification(int n, std::uint64_t target, std::ostream& out,
                     const VerifyHooks& hooks = {});

/// Command-line entry point; args excludes the program name.
/// Exit codes: 0 ok, 1 usage or domain error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qsearch
