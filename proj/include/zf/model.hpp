#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "zf/rational.hpp"

namespace zf::milp {

enum class RowSense { LE, GE, EQ };
enum class ObjSense { Minimize, Maximize };

enum class SolveStatus { Optimal, Infeasible, Unbounded, BudgetExceeded };

const char* to_string(SolveStatus s);

struct Variable {
    std::string name;
    Rat lb;
    Rat ub;
    bool integral = false;
};

struct Row {
    std::string name;
    std::vector<std::pair<int, Rat>> terms;  // (variable index, coefficient)
    RowSense sense = RowSense::LE;
    Rat rhs;
};

// Solver-agnostic linear/integer program over exact rationals.
class LinearModel {
public:
    LinearModel() = default;
    explicit LinearModel(std::string name) : name_(std::move(name)) {}

    int add_variable(const std::string& name, const Rat& lb, const Rat& ub, bool integral);
    int add_binary(const std::string& name) { return add_variable(name, 0, 1, true); }
    void add_constraint(std::vector<std::pair<int, Rat>> terms, RowSense sense, Rat rhs,
                        std::string name = "");
    void set_objective(std::vector<std::pair<int, Rat>> terms, ObjSense sense);
    void fix_variable(int var, const Rat& value);

    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(rows_.size()); }
    const Variable& variable(int i) const { return vars_[static_cast<size_t>(i)]; }
    const Row& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<Row>& rows() const { return rows_; }
    const std::vector<std::pair<int, Rat>>& objective() const { return objective_; }
    ObjSense objective_sense() const { return obj_sense_; }
    std::optional<int> variable_index(const std::string& name) const;

    Rat objective_value(const std::vector<Rat>& x) const;
    // Index of the first violated row (bounds and integrality are checked
    // first and reported as -1-var), nullopt when x is feasible.
    std::optional<std::string> first_violation(const std::vector<Rat>& x) const;
    bool is_feasible(const std::vector<Rat>& x) const { return !first_violation(x); }

    // Structural equality: variables (names, bounds, integrality), rows, and
    // objective all match exactly.
    bool operator==(const LinearModel& other) const;

private:
    std::string name_ = "model";
    std::vector<Variable> vars_;
    std::vector<Row> rows_;
    std::vector<std::pair<int, Rat>> objective_;
    ObjSense obj_sense_ = ObjSense::Minimize;
    std::unordered_map<std::string, int> index_;
};

struct SolveStats {
    long nodes = 0;
    long pivots = 0;
    double wall_seconds = 0.0;
};

// Assignment + objective in exact rationals. `objective_value` and
// `assignment` are only meaningful for Optimal (or BudgetExceeded with
// has_incumbent). `root_lp_bound` is the certified LP relaxation optimum.
struct Solution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<Rat> assignment;
    Rat objective_value;
    bool has_incumbent = false;
    std::optional<Rat> root_lp_bound;
    SolveStats stats;

    Rat value_of(const LinearModel& m, const std::string& var) const;
};

}  // namespace zf::milp
