#pragma once

#include <string>

#include "zf/model.hpp"

namespace zf::milp {

// Fixed-format MPS with INTORG/INTEND markers and a BOUNDS section. Values
// are written as decimals (up to 12 characters); any coefficient that a
// decimal of that width cannot represent exactly carries a trailing
// `$= p/q` comment with the exact ratio, which readers treating `$` as a
// comment marker ignore and parse_mps uses to reconstruct the model
// bit-exactly. Names longer than 8 characters are mangled to a stable
// `Vk`/`Ck` form recorded in header comments.
std::string export_mps(const LinearModel& model);

// CPLEX-style LP text (objective, constraints, bounds, generals/binaries),
// with exact ratios for non-terminating coefficients in `\` comments.
std::string export_lp_format(const LinearModel& model);

// Parses the subset of MPS that export_mps emits (plus RANGES-free standard
// files); honors `$=` exact-ratio comments.
LinearModel parse_mps(const std::string& text);

// Shells out to an external solver. The command is run as
//   <command> <model.mps> <solution_file>
// and the solution file grammar is: comment lines starting with `#`, of which
// one may read `# Objective value = <number>`, followed by `<name> <value>`
// lines (the Gurobi .sol convention).
struct ExternalResult {
    bool solved = false;
    Rat objective;
    std::vector<std::pair<std::string, Rat>> values;
};

ExternalResult solve_with_external(const LinearModel& model, const std::string& command,
                                   const std::string& workdir);

// Parses the documented solution-file grammar.
ExternalResult parse_solution_file(const std::string& text);

}  // namespace zf::milp
