#include "zf/simplex.hpp"

#include <map>
#include <stdexcept>

namespace zf::milp {

namespace {
constexpr long kPivotSafetyCap = 200'000'000;
}

SimplexSolver::SimplexSolver(const LinearModel& model) {
    ns_ = model.num_variables();
    nrows_ = 0;

    cost_.assign(static_cast<size_t>(ns_), Rat(0));
    bool maximize = model.objective_sense() == ObjSense::Maximize;
    for (const auto& [v, c] : model.objective())
        cost_[static_cast<size_t>(v)] += maximize ? Rat(-c) : c;

    lb_.reserve(static_cast<size_t>(ns_));
    ub_.reserve(static_cast<size_t>(ns_));
    for (const auto& v : model.variables()) {
        lb_.push_back(v.lb);
        ub_.push_back(v.ub);
        lb_inf_.push_back(0);
        ub_inf_.push_back(0);
        state_.push_back(cost_[lb_.size() - 1] >= 0 ? kAtLb : kAtUb);
        row_of_.push_back(-1);
        slot_of_.push_back(static_cast<int>(lb_.size()) - 1);
        slot_var_.push_back(static_cast<int>(lb_.size()) - 1);
    }

    obj_ = 0;
    for (int j = 0; j < ns_; ++j) obj_ += cost_[static_cast<size_t>(j)] * seat_value(j);
    dcost_ = cost_;

    for (const auto& row : model.rows()) add_row(row.terms, row.sense, row.rhs);
}

Rat SimplexSolver::seat_value(int col) const {
    if (state_[static_cast<size_t>(col)] == kAtLb) {
        if (!lb_finite(col)) throw std::logic_error("simplex: variable seated at -inf");
        return lb_[static_cast<size_t>(col)];
    }
    if (!ub_finite(col)) throw std::logic_error("simplex: variable seated at +inf");
    return ub_[static_cast<size_t>(col)];
}

bool SimplexSolver::is_fixed(int col) const {
    return lb_finite(col) && ub_finite(col) && lb_[static_cast<size_t>(col)] == ub_[static_cast<size_t>(col)];
}

void SimplexSolver::set_bounds(int var, const Rat& lb, const Rat& ub) {
    if (var < 0 || var >= ns_) throw std::invalid_argument("set_bounds: not a structural variable");
    if (lb > ub) throw std::invalid_argument("set_bounds: empty interval");
    size_t v = static_cast<size_t>(var);
    if (state_[v] == kBasic) {
        lb_[v] = lb;
        ub_[v] = ub;
        return;
    }
    Rat old_val = seat_value(var);
    lb_[v] = lb;
    ub_[v] = ub;
    Rat delta = seat_value(var) - old_val;
    if (delta == 0) return;
    int s = slot_of_[v];
    for (int i = 0; i < nrows_; ++i) {
        const Rat& t = tab(i, s);
        if (t != 0) beta_[static_cast<size_t>(i)] -= t * delta;
    }
    obj_ += dcost_[static_cast<size_t>(s)] * delta;
}

void SimplexSolver::add_row(const std::vector<std::pair<int, Rat>>& terms, RowSense sense,
                            const Rat& rhs) {
    std::map<int, Rat> agg;
    for (const auto& [v, c] : terms)
        if (c != 0) agg[v] += c;
    std::vector<std::pair<int, Rat>> row;
    for (auto& [v, c] : agg)
        if (c != 0) row.emplace_back(v, c);

    int r = nrows_;
    int slack = ns_ + r;
    rows_.push_back(row);
    rhs_.push_back(rhs);
    switch (sense) {
        case RowSense::LE:
            lb_.push_back(Rat(0));
            ub_.push_back(Rat(0));
            lb_inf_.push_back(0);
            ub_inf_.push_back(1);
            break;
        case RowSense::GE:
            lb_.push_back(Rat(0));
            ub_.push_back(Rat(0));
            lb_inf_.push_back(1);
            ub_inf_.push_back(0);
            break;
        case RowSense::EQ:
            lb_.push_back(Rat(0));
            ub_.push_back(Rat(0));
            lb_inf_.push_back(0);
            ub_inf_.push_back(0);
            break;
    }
    state_.push_back(kBasic);
    row_of_.push_back(r);
    slot_of_.push_back(-1);
    basic_var_.push_back(slack);

    // Tableau row of the new (basic) slack w = rhs - a.x, expressed over the
    // current nonbasic slots: a_N - a_B * (B^{-1} N).
    std::vector<Rat> trow(static_cast<size_t>(ns_), Rat(0));
    Rat activity = 0;
    for (const auto& [v, c] : row) {
        size_t sv = static_cast<size_t>(v);
        if (state_[sv] == kBasic) {
            int br = row_of_[sv];
            activity += c * beta_[static_cast<size_t>(br)];
            for (int j = 0; j < ns_; ++j) {
                const Rat& t = tab(br, j);
                if (t != 0) trow[static_cast<size_t>(j)] -= c * t;
            }
        } else {
            activity += c * seat_value(v);
            trow[static_cast<size_t>(slot_of_[sv])] += c;
        }
    }
    tab_.insert(tab_.end(), trow.begin(), trow.end());
    beta_.push_back(rhs - activity);
    ++nrows_;
}

void SimplexSolver::pivot(int r, int s, State leaving_state, const Rat& entering_delta) {
    int entering = slot_var_[static_cast<size_t>(s)];
    int leaving = basic_var_[static_cast<size_t>(r)];
    Rat piv = tab(r, s);
    if (piv == 0) throw std::logic_error("simplex: zero pivot");
    Rat inv = Rat(1) / piv;

    Rat entering_new = seat_value(entering) + entering_delta;

    // objective and primal values move with the entering variable
    obj_ += dcost_[static_cast<size_t>(s)] * entering_delta;
    for (int i = 0; i < nrows_; ++i) {
        if (i == r) continue;
        const Rat& t = tab(i, s);
        if (t != 0) beta_[static_cast<size_t>(i)] -= t * entering_delta;
    }

    // row r scaling; slot s becomes the leaving variable's column
    for (int j = 0; j < ns_; ++j)
        if (j != s && tab(r, j) != 0) tab(r, j) *= inv;
    tab(r, s) = inv;

    Rat ds = dcost_[static_cast<size_t>(s)];
    if (ds != 0) {
        for (int j = 0; j < ns_; ++j) {
            if (j == s) continue;
            const Rat& t = tab(r, j);
            if (t != 0) dcost_[static_cast<size_t>(j)] -= ds * t;
        }
    }
    dcost_[static_cast<size_t>(s)] = -ds * inv;

    for (int i = 0; i < nrows_; ++i) {
        if (i == r) continue;
        Rat pc = tab(i, s);
        if (pc == 0) continue;
        for (int j = 0; j < ns_; ++j) {
            if (j == s) continue;
            const Rat& t = tab(r, j);
            if (t != 0) tab(i, j) -= pc * t;
        }
        tab(i, s) = -pc * inv;
    }

    basic_var_[static_cast<size_t>(r)] = entering;
    state_[static_cast<size_t>(entering)] = kBasic;
    row_of_[static_cast<size_t>(entering)] = r;
    slot_of_[static_cast<size_t>(entering)] = -1;

    state_[static_cast<size_t>(leaving)] = static_cast<char>(leaving_state);
    row_of_[static_cast<size_t>(leaving)] = -1;
    slot_of_[static_cast<size_t>(leaving)] = s;
    slot_var_[static_cast<size_t>(s)] = leaving;

    beta_[static_cast<size_t>(r)] = entering_new;
    ++pivots_;
    if (pivots_ > kPivotSafetyCap) throw std::runtime_error("simplex: pivot safety cap exceeded");
}

LpStatus SimplexSolver::solve() {
    while (true) {
        // leaving: smallest basic variable index among primal-infeasible rows
        int r = -1, leave_var = -1;
        bool to_upper = false;
        for (int i = 0; i < nrows_; ++i) {
            int b = basic_var_[static_cast<size_t>(i)];
            size_t sb = static_cast<size_t>(b);
            const Rat& val = beta_[static_cast<size_t>(i)];
            bool low = !lb_inf_[sb] && val < lb_[sb];
            bool high = !ub_inf_[sb] && val > ub_[sb];
            if ((low || high) && (leave_var == -1 || b < leave_var)) {
                leave_var = b;
                r = i;
                to_upper = high;
            }
        }
        if (r == -1) return LpStatus::Optimal;

        size_t sl = static_cast<size_t>(leave_var);
        Rat target = to_upper ? ub_[sl] : lb_[sl];
        // need_increase: the leaving basic variable must move up toward its bound
        bool need_increase = !to_upper;

        // entering: Bland among minimal dual ratio |dcost/alpha|
        int best_slot = -1, best_var = -1;
        Rat best_ratio;
        for (int s = 0; s < ns_; ++s) {
            int q = slot_var_[static_cast<size_t>(s)];
            if (is_fixed(q)) continue;
            const Rat& alpha = tab(r, s);
            if (alpha == 0) continue;
            bool at_lb = state_[static_cast<size_t>(q)] == kAtLb;
            // moving q by delta changes beta[r] by -alpha*delta; q may only
            // move up from a lower seat or down from an upper seat
            bool eligible = need_increase ? (at_lb ? alpha < 0 : alpha > 0)
                                          : (at_lb ? alpha > 0 : alpha < 0);
            if (!eligible) continue;
            // eligible ratios share one sign; minimal magnitude keeps dual feasibility
            Rat aratio = abs(dcost_[static_cast<size_t>(s)] / alpha);
            if (best_slot == -1 || aratio < best_ratio ||
                (aratio == best_ratio && q < best_var)) {
                best_slot = s;
                best_var = q;
                best_ratio = aratio;
            }
        }
        if (best_slot == -1) return LpStatus::Infeasible;

        const Rat& alpha = tab(r, best_slot);
        Rat delta = (beta_[static_cast<size_t>(r)] - target) / alpha;
        pivot(r, best_slot, to_upper ? kAtUb : kAtLb, delta);
    }
}

std::vector<Rat> SimplexSolver::structural_values() const {
    std::vector<Rat> x(static_cast<size_t>(ns_));
    for (int j = 0; j < ns_; ++j)
        x[static_cast<size_t>(j)] = state_[static_cast<size_t>(j)] == kBasic
                                        ? beta_[static_cast<size_t>(row_of_[static_cast<size_t>(j)])]
                                        : seat_value(j);
    return x;
}

void SimplexSolver::verify_certificate() const {
    std::vector<Rat> x = structural_values();
    int ncols = ns_ + nrows_;

    // duals: y_i = 0 when slack i is basic, else -reduced_cost(slack i)
    std::vector<Rat> y(static_cast<size_t>(nrows_), Rat(0));
    for (int i = 0; i < nrows_; ++i) {
        int slack = ns_ + i;
        if (state_[static_cast<size_t>(slack)] != kBasic)
            y[static_cast<size_t>(i)] = -dcost_[static_cast<size_t>(slot_of_[static_cast<size_t>(slack)])];
    }

    // slack values and row equations, recomputed from the original data
    std::vector<Rat> slack_val(static_cast<size_t>(nrows_));
    for (int i = 0; i < nrows_; ++i) {
        Rat activity = 0;
        for (const auto& [v, c] : rows_[static_cast<size_t>(i)]) activity += c * x[static_cast<size_t>(v)];
        slack_val[static_cast<size_t>(i)] = rhs_[static_cast<size_t>(i)] - activity;
    }

    Rat primal_obj = 0;
    for (int j = 0; j < ns_; ++j) primal_obj += cost_[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
    if (primal_obj != obj_) throw std::logic_error("certificate: objective drift");

    auto value_of = [&](int col) {
        return col < ns_ ? x[static_cast<size_t>(col)] : slack_val[static_cast<size_t>(col - ns_)];
    };
    for (int col = 0; col < ncols; ++col) {
        size_t c = static_cast<size_t>(col);
        Rat val = value_of(col);
        if (!lb_inf_[c] && val < lb_[c]) throw std::logic_error("certificate: primal lb violated");
        if (!ub_inf_[c] && val > ub_[c]) throw std::logic_error("certificate: primal ub violated");
        if (state_[c] == kBasic) {
            if (row_of_[c] < 0 || basic_var_[static_cast<size_t>(row_of_[c])] != col)
                throw std::logic_error("certificate: basis bookkeeping");
            if (beta_[static_cast<size_t>(row_of_[c])] != val)
                throw std::logic_error("certificate: basic value drift");
        } else if (val != (state_[c] == kAtLb ? lb_[c] : ub_[c])) {
            throw std::logic_error("certificate: nonbasic seat drift");
        }
    }

    // reduced costs from scratch: dhat_j = c_j - y.A_j
    Rat dual_obj = 0;
    for (int i = 0; i < nrows_; ++i) dual_obj += y[static_cast<size_t>(i)] * rhs_[static_cast<size_t>(i)];
    std::vector<Rat> dhat(static_cast<size_t>(ncols), Rat(0));
    for (int j = 0; j < ns_; ++j) dhat[static_cast<size_t>(j)] = cost_[static_cast<size_t>(j)];
    for (int i = 0; i < nrows_; ++i) {
        const Rat& yi = y[static_cast<size_t>(i)];
        dhat[static_cast<size_t>(ns_ + i)] -= yi;
        if (yi == 0) continue;
        for (const auto& [v, c] : rows_[static_cast<size_t>(i)]) dhat[static_cast<size_t>(v)] -= yi * c;
    }
    for (int col = 0; col < ncols; ++col) {
        size_t c = static_cast<size_t>(col);
        if (state_[c] == kBasic) {
            if (dhat[c] != 0) throw std::logic_error("certificate: basic reduced cost nonzero");
        } else if (!is_fixed(col)) {
            if (state_[c] == kAtLb && dhat[c] < 0)
                throw std::logic_error("certificate: dual sign at lower bound");
            if (state_[c] == kAtUb && dhat[c] > 0)
                throw std::logic_error("certificate: dual sign at upper bound");
        }
        if (state_[c] != kBasic) dual_obj += dhat[c] * value_of(col);
    }
    if (dual_obj != primal_obj) throw std::logic_error("certificate: strong duality gap");
}

}  // namespace zf::milp
