#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "zf/model.hpp"

namespace zf::milp {

struct Budget {
    double wall_seconds = 7200.0;  // matches the usual external-solver time limit
    long max_nodes = -1;           // < 0 means unlimited
};

struct NodeView {
    const LinearModel* model;
    const std::vector<Rat>* lb;  // current node bounds per variable
    const std::vector<Rat>* ub;
};

// Problem-aware node hook. `Resolved` asserts the node subproblem's exact
// optimum is attained by `assignment` (a complete feasible integral point
// within the node bounds); `PruneInfeasible` asserts the subtree has no
// integer-feasible point; `Bound` supplies a valid bound on the node optimum
// in the model's objective sense. Assignments that improve the incumbent are
// re-verified against the model exactly.
enum class CallbackAction { Continue, PruneInfeasible, Resolved, Bound };

struct CallbackResult {
    CallbackAction action = CallbackAction::Continue;
    std::vector<Rat> assignment;
    Rat bound;

    static CallbackResult cont() { return {}; }
    static CallbackResult prune() { return {CallbackAction::PruneInfeasible, {}, Rat(0)}; }
    static CallbackResult resolved(std::vector<Rat> x) {
        return {CallbackAction::Resolved, std::move(x), Rat(0)};
    }
    static CallbackResult bounded(Rat b) { return {CallbackAction::Bound, {}, std::move(b)}; }
};

using NodeCallback = std::function<CallbackResult(const NodeView&)>;

// Always: LP bounding at every node. RootOnly: certified root LP, then
// combinatorial search over the branch priority order, with LP solves only
// when the priority order runs out. Used for the time-indexed models whose
// relaxations are weak but whose leaves a callback resolves exactly.
enum class LpMode { Always, RootOnly };

struct SolveHints {
    NodeCallback callback;
    std::vector<int> branch_priority;
    std::optional<std::vector<Rat>> incumbent;  // feasible warm-start assignment
    LpMode lp_mode = LpMode::Always;
};

// Exact rational optimum of the continuous relaxation (integrality ignored);
// the returned optimum carries an exact dual certificate (verified
// internally, throws on failure).
Solution solve_lp(const LinearModel& model);

// Exact optimum by branch-and-bound with LP bounding: depth-first, down
// branch first, branching on the hinted priority order and otherwise on the
// lowest-index fractional variable. Returns BudgetExceeded with the best
// incumbent when limits are hit. Deterministic: identical inputs give
// identical solutions.
Solution solve_ip(const LinearModel& model, const Budget& budget = {}, const SolveHints& hints = {});

}  // namespace zf::milp
