#include "zf/solver.hpp"

#include <chrono>
#include <stdexcept>

#include "zf/simplex.hpp"

namespace zf::milp {

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const LinearModel& model;
    const Budget& budget;
    const SolveHints& hints;
    SimplexSolver spx;
    std::vector<Rat> lb, ub;
    std::vector<char> integral;
    bool maximize;
    std::optional<Rat> grid;  // integer-feasible objectives live on grid * Z

    Clock::time_point start;
    long nodes = 0;
    bool stopped = false;

    bool has_inc = false;
    std::vector<Rat> inc_x;
    Rat inc_val;  // internal minimization sense

    std::optional<Rat> root_bound;

    explicit Search(const LinearModel& m, const Budget& b, const SolveHints& h)
        : model(m), budget(b), hints(h), spx(m), maximize(m.objective_sense() == ObjSense::Maximize) {
        lb.reserve(static_cast<size_t>(m.num_variables()));
        ub.reserve(static_cast<size_t>(m.num_variables()));
        for (const auto& v : m.variables()) {
            lb.push_back(v.lb);
            ub.push_back(v.ub);
            integral.push_back(v.integral);
        }
        mpz_class lcm = 1;
        bool grid_ok = true;
        for (const auto& [v, c] : m.objective()) {
            if (c == 0) continue;
            if (!m.variable(v).integral) {
                grid_ok = false;
                break;
            }
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        }
        if (grid_ok) grid = Rat(1) / Rat(lcm);
        start = Clock::now();
    }

    Rat internal_obj(const std::vector<Rat>& x) const {
        Rat v = model.objective_value(x);
        return maximize ? Rat(-v) : v;
    }

    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start).count(); }

    bool over_budget() {
        if (budget.max_nodes >= 0 && nodes > budget.max_nodes) return true;
        // check the clock sparsely: rational pivots dominate, nodes are cheap
        if ((nodes & 0x3f) == 0 && elapsed() > budget.wall_seconds) return true;
        return false;
    }

    // true when no strictly better integer point than the incumbent can live
    // above this bound
    bool bound_prunes(const Rat& internal_bound) const {
        if (!has_inc) return false;
        Rat b = grid ? round_up_to_grid(internal_bound, *grid) : internal_bound;
        return b >= inc_val;
    }

    void offer_incumbent(const std::vector<Rat>& x, bool verify_rows) {
        Rat val = internal_obj(x);
        if (has_inc && val >= inc_val) return;
        if (verify_rows) {
            auto why = model.first_violation(x);
            if (why) throw std::logic_error("solver hint produced an infeasible assignment: " + *why);
            for (int j = 0; j < model.num_variables(); ++j) {
                size_t sj = static_cast<size_t>(j);
                if (x[sj] < lb[sj] || x[sj] > ub[sj])
                    throw std::logic_error("solver hint violates node bounds at " +
                                           model.variable(j).name);
            }
        }
        inc_x = x;
        inc_val = val;
        has_inc = true;
    }

    int first_unfixed_priority() const {
        for (int v : hints.branch_priority)
            if (lb[static_cast<size_t>(v)] < ub[static_cast<size_t>(v)]) return v;
        return -1;
    }

    void branch(int v, const Rat& split, int depth) {
        size_t sv = static_cast<size_t>(v);
        Rat old_lb = lb[sv], old_ub = ub[sv];
        // down branch first
        ub[sv] = split;
        spx.set_bounds(v, lb[sv], ub[sv]);
        eval(depth + 1);
        ub[sv] = old_ub;
        lb[sv] = split + 1;
        spx.set_bounds(v, lb[sv], ub[sv]);
        eval(depth + 1);
        lb[sv] = old_lb;
        spx.set_bounds(v, lb[sv], ub[sv]);
    }

    void eval(int depth) {
        if (stopped) return;
        ++nodes;
        if (over_budget()) {
            stopped = true;
            return;
        }

        bool lp_solved = false;
        std::vector<Rat> x;

        // the root LP is always solved: it is the model's LP relaxation bound
        if (depth == 0) {
            if (spx.solve() == LpStatus::Infeasible) return;
            spx.verify_certificate();
            root_bound = spx.objective();
            lp_solved = true;
        }

        if (hints.callback) {
            CallbackResult res = hints.callback(NodeView{&model, &lb, &ub});
            switch (res.action) {
                case CallbackAction::PruneInfeasible:
                    return;
                case CallbackAction::Resolved:
                    offer_incumbent(res.assignment, /*verify_rows=*/true);
                    return;
                case CallbackAction::Bound: {
                    Rat b = maximize ? Rat(-res.bound) : res.bound;
                    if (bound_prunes(b)) return;
                    break;
                }
                case CallbackAction::Continue:
                    break;
            }
        }

        bool need_lp = hints.lp_mode == LpMode::Always || lp_solved;
        int pv = -1;
        if (!need_lp) {
            pv = first_unfixed_priority();
            if (pv < 0) need_lp = true;  // priority order exhausted: fall back to LP
        }

        if (need_lp) {
            if (!lp_solved) {
                if (spx.solve() == LpStatus::Infeasible) return;
                spx.verify_certificate();
            }
            Rat bound = spx.objective();
            if (bound_prunes(bound)) return;
            x = spx.structural_values();
            int frac = -1;
            for (int j = 0; j < model.num_variables(); ++j)
                if (integral[static_cast<size_t>(j)] && !is_integer(x[static_cast<size_t>(j)])) {
                    frac = j;
                    break;
                }
            if (frac < 0) {
                // integral LP optimum: this node is solved exactly
                offer_incumbent(x, /*verify_rows=*/false);
                return;
            }
            int v = first_unfixed_priority();
            if (v < 0) v = frac;
            Rat split(rat_floor(x[static_cast<size_t>(v)]));
            if (split >= ub[static_cast<size_t>(v)]) split -= 1;
            if (split < lb[static_cast<size_t>(v)]) split = lb[static_cast<size_t>(v)];
            branch(v, split, depth);
        } else {
            branch(pv, lb[static_cast<size_t>(pv)], depth);
        }
    }
};

}  // namespace

Solution solve_lp(const LinearModel& model) {
    SimplexSolver spx(model);
    Solution sol;
    auto t0 = Clock::now();
    LpStatus st = spx.solve();
    sol.stats.pivots = spx.pivots();
    sol.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (st == LpStatus::Infeasible) {
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    spx.verify_certificate();
    sol.status = SolveStatus::Optimal;
    sol.assignment = spx.structural_values();
    sol.objective_value =
        model.objective_sense() == ObjSense::Maximize ? Rat(-spx.objective()) : spx.objective();
    sol.root_lp_bound = sol.objective_value;
    sol.has_incumbent = true;
    return sol;
}

Solution solve_ip(const LinearModel& model, const Budget& budget, const SolveHints& hints) {
    Search search(model, budget, hints);
    if (hints.incumbent) {
        auto why = model.first_violation(*hints.incumbent);
        if (why)
            throw std::invalid_argument("warm-start incumbent is infeasible: " + *why);
        search.offer_incumbent(*hints.incumbent, /*verify_rows=*/false);
    }
    auto t0 = Clock::now();
    search.eval(0);

    Solution sol;
    sol.stats.nodes = search.nodes;
    sol.stats.pivots = search.spx.pivots();
    sol.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    bool maximize = model.objective_sense() == ObjSense::Maximize;
    if (search.root_bound)
        sol.root_lp_bound = maximize ? Rat(-*search.root_bound) : *search.root_bound;
    if (search.stopped) {
        sol.status = SolveStatus::BudgetExceeded;
        sol.has_incumbent = search.has_inc;
        if (search.has_inc) {
            sol.assignment = search.inc_x;
            sol.objective_value = maximize ? Rat(-search.inc_val) : search.inc_val;
        }
        return sol;
    }
    if (!search.has_inc) {
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    sol.status = SolveStatus::Optimal;
    sol.has_incumbent = true;
    sol.assignment = search.inc_x;
    sol.objective_value = maximize ? Rat(-search.inc_val) : search.inc_val;
    return sol;
}

}  // namespace zf::milp
