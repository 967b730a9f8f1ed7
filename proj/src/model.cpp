#include "zf/model.hpp"

#include <stdexcept>

namespace zf::milp {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

int LinearModel::add_variable(const std::string& name, const Rat& lb, const Rat& ub, bool integral) {
    if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
    if (index_.count(name)) throw std::invalid_argument("duplicate variable name: " + name);
    if (lb > ub) throw std::invalid_argument("variable " + name + ": lower bound exceeds upper");
    int idx = static_cast<int>(vars_.size());
    vars_.push_back({name, lb, ub, integral});
    index_.emplace(name, idx);
    return idx;
}

void LinearModel::add_constraint(std::vector<std::pair<int, Rat>> terms, RowSense sense, Rat rhs,
                                 std::string name) {
    for (auto& [v, coef] : terms) {
        (void)coef;
        if (v < 0 || v >= num_variables())
            throw std::invalid_argument("constraint references undeclared variable");
    }
    if (name.empty()) name = "c" + std::to_string(rows_.size());
    rows_.push_back({std::move(name), std::move(terms), sense, std::move(rhs)});
}

void LinearModel::set_objective(std::vector<std::pair<int, Rat>> terms, ObjSense sense) {
    for (auto& [v, coef] : terms) {
        (void)coef;
        if (v < 0 || v >= num_variables())
            throw std::invalid_argument("objective references undeclared variable");
    }
    objective_ = std::move(terms);
    obj_sense_ = sense;
}

void LinearModel::fix_variable(int var, const Rat& value) {
    auto& v = vars_.at(static_cast<size_t>(var));
    v.lb = value;
    v.ub = value;
}

std::optional<int> LinearModel::variable_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Rat LinearModel::objective_value(const std::vector<Rat>& x) const {
    Rat total = 0;
    for (const auto& [v, coef] : objective_) total += coef * x[static_cast<size_t>(v)];
    return total;
}

std::optional<std::string> LinearModel::first_violation(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != num_variables()) return "assignment size mismatch";
    for (int i = 0; i < num_variables(); ++i) {
        const auto& v = vars_[static_cast<size_t>(i)];
        const Rat& xi = x[static_cast<size_t>(i)];
        if (xi < v.lb || xi > v.ub) return "bound of " + v.name;
        if (v.integral && !is_integer(xi)) return "integrality of " + v.name;
    }
    for (const auto& row : rows_) {
        Rat lhs = 0;
        for (const auto& [v, coef] : row.terms) lhs += coef * x[static_cast<size_t>(v)];
        bool ok = row.sense == RowSense::LE   ? lhs <= row.rhs
                  : row.sense == RowSense::GE ? lhs >= row.rhs
                                              : lhs == row.rhs;
        if (!ok) return "row " + row.name;
    }
    return std::nullopt;
}

bool LinearModel::operator==(const LinearModel& other) const {
    if (num_variables() != other.num_variables() || num_constraints() != other.num_constraints())
        return false;
    for (int i = 0; i < num_variables(); ++i) {
        const auto& a = vars_[static_cast<size_t>(i)];
        const auto& b = other.vars_[static_cast<size_t>(i)];
        if (a.name != b.name || a.lb != b.lb || a.ub != b.ub || a.integral != b.integral)
            return false;
    }
    auto normalize = [](const Row& r) {
        std::map<int, Rat> terms;
        for (const auto& [v, c] : r.terms)
            if (c != 0) terms[v] += c;
        return terms;
    };
    for (int i = 0; i < num_constraints(); ++i) {
        const auto& a = rows_[static_cast<size_t>(i)];
        const auto& b = other.rows_[static_cast<size_t>(i)];
        if (a.sense != b.sense || a.rhs != b.rhs || normalize(a) != normalize(b)) return false;
    }
    auto aggregate = [](const std::vector<std::pair<int, Rat>>& terms) {
        std::map<int, Rat> m;
        for (const auto& [v, c] : terms) m[v] += c;
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        return m;
    };
    return obj_sense_ == other.obj_sense_ && aggregate(objective_) == aggregate(other.objective_);
}

Rat Solution::value_of(const LinearModel& m, const std::string& var) const {
    auto idx = m.variable_index(var);
    if (!idx) throw std::invalid_argument("unknown variable: " + var);
    return assignment.at(static_cast<size_t>(*idx));
}

}  // namespace zf::milp
