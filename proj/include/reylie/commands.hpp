#pragma once

// The command layer behind the CLI and the Python module: each command
// takes a loaded workspace and returns a status, a JSON report and the same
// report as text.

#include "reylie/workspace.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace reylie::cli {

enum Status : int { Pass = 0, MathFailure = 1, InputFailure = 2, InternalFailure = 3 };

struct Outcome {
    int status = Pass;
    io::json report;
    std::string text;
};

struct Options {
    /// Also evaluate the literal variants of the ambiguous formulas; they
    /// are reported under "audit" and never change the status.
    bool strict_literal = false;
    /// Item to act on; empty picks the first item of a usable kind.
    std::string item;
};

struct CohomologyOptions : Options {
    ComplexKind complex = ComplexKind::CE;
    std::optional<std::pair<int, int>> degrees;
    bool basis = false;
};

/// "A..B" or "N"; throws io::InputError.
std::pair<int, int> parse_degrees(const std::string &text);

/// Every applicable validator on every item. Invalid items are reported as
/// quarantined with their residuals.
Outcome validate(const io::Workspace &ws, const Options &opt = {});
/// Per-degree dimensions of the chosen complex for a rep (or the adjoint
/// rep of a pair).
Outcome cohomology(const io::Workspace &ws, const CohomologyOptions &opt);
/// Deformation equations, infinitesimal cocycle and rigidity probe for a
/// truncation (a bare pair gets the probe only).
Outcome deform(const io::Workspace &ws, const Options &opt = {});
/// Assembles the extension and compares both verdicts.
Outcome extend(const io::Workspace &ws, const Options &opt = {});
/// Obstruction class and, when it vanishes, the extended derivation.
Outcome obstruct(const io::Workspace &ws, const Options &opt = {});

/// Runs `body`, turning input errors into status 2, refused preconditions
/// into status 1 with the refusing verdict, and failed postconditions into
/// status 3.
Outcome guarded(const std::function<Outcome()> &body);

/// Loads `path` and runs the command under `guarded`.
Outcome run_file(const std::string &path, const std::function<Outcome(const io::Workspace &)> &command);

} // namespace reylie::cli
