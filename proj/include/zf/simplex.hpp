#pragma once

#include <vector>

#include "zf/model.hpp"

namespace zf::milp {

enum class LpStatus { Optimal, Infeasible };

// Bounded-variable tableau simplex over exact rationals, run in dual form
// with Bland's smallest-index rule. The slack basis with every structural
// variable seated on its cost-favorable bound is dual feasible by
// construction, so no phase 1 is needed, and variable-bound changes (the only
// modification branch-and-bound makes) keep the basis dual feasible, giving
// cheap warm restarts. Appending a row keeps the basis dual feasible as well,
// which is what the constraint-generation loops use.
//
// Structural variables must be box-bounded (LinearModel guarantees this);
// only slacks carry infinite bounds.
class SimplexSolver {
public:
    explicit SimplexSolver(const LinearModel& model);

    // Structural variable bound change; the nonbasic seat is moved if needed.
    void set_bounds(int var, const Rat& lb, const Rat& ub);
    void add_row(const std::vector<std::pair<int, Rat>>& terms, RowSense sense, const Rat& rhs);

    // Dual simplex from the current basis to primal feasibility.
    LpStatus solve();

    // Internal objective (minimization; callers handle sense flips).
    const Rat& objective() const { return obj_; }
    std::vector<Rat> structural_values() const;
    long pivots() const { return pivots_; }
    int num_rows() const { return nrows_; }

    // Exact from-scratch optimality certificate for the last Optimal solve:
    // primal feasibility, dual sign conditions, and strong duality as an
    // equality test. Throws std::logic_error on any failure.
    void verify_certificate() const;

private:
    enum State : char { kAtLb, kAtUb, kBasic };

    Rat seat_value(int col) const;
    Rat& tab(int row, int slot) { return tab_[static_cast<size_t>(row) * static_cast<size_t>(ns_) + static_cast<size_t>(slot)]; }
    const Rat& tab(int row, int slot) const { return tab_[static_cast<size_t>(row) * static_cast<size_t>(ns_) + static_cast<size_t>(slot)]; }
    bool is_fixed(int col) const;
    bool lb_finite(int col) const { return !lb_inf_[static_cast<size_t>(col)]; }
    bool ub_finite(int col) const { return !ub_inf_[static_cast<size_t>(col)]; }
    void pivot(int row, int slot, State leaving_state, const Rat& entering_delta);

    int ns_ = 0;     // structural columns (also the number of tableau slots)
    int nrows_ = 0;  // rows; slack of row i is column ns_ + i

    std::vector<std::vector<std::pair<int, Rat>>> rows_;  // structural terms, aggregated
    std::vector<Rat> rhs_;
    std::vector<Rat> cost_;  // per structural column

    std::vector<Rat> lb_, ub_;
    std::vector<char> lb_inf_, ub_inf_;
    std::vector<char> state_;
    std::vector<int> basic_var_;  // row -> column
    std::vector<int> row_of_;     // column -> row (-1 when nonbasic)
    std::vector<int> slot_of_;    // column -> slot (-1 when basic)
    std::vector<int> slot_var_;   // slot -> column

    std::vector<Rat> tab_;    // nrows_ x ns_, row-major: B^{-1} A over nonbasic slots
    std::vector<Rat> beta_;   // basic variable value per row
    std::vector<Rat> dcost_;  // reduced cost per slot
    Rat obj_;
    long pivots_ = 0;
};

}  // namespace zf::milp
