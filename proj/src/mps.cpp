#include "zf/mps.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zf::milp {

namespace {

// Exact decimal rendering if the denominator is 2^a 5^b and the text fits
// the MPS value field; otherwise nullopt.
std::optional<std::string> exact_decimal(const Rat& r, size_t max_len) {
    mpz_class den = r.get_den();
    int k = 0;
    while (den % 2 == 0) den /= 2, ++k;
    int f = 0;
    while (den % 5 == 0) den /= 5, ++f;
    if (den != 1) return std::nullopt;
    int digits = std::max(k, f);
    std::string s = rat_to_decimal(r, digits);
    if (digits > 0) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s.size() > max_len) return std::nullopt;
    return s;
}

std::string approx_decimal(const Rat& r, size_t max_len) {
    for (int digits = static_cast<int>(max_len) - 2; digits >= 1; --digits) {
        std::string s = rat_to_decimal(r, digits);
        if (s.size() <= max_len) return s;
    }
    return rat_to_decimal(r, 1);
}

std::string pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

struct NameTable {
    std::vector<std::string> emitted;
    std::vector<std::pair<std::string, std::string>> mangled;  // (short, original)

    std::string shorten(const std::string& name, char prefix, int index) {
        if (name.size() <= 8 && name.find(' ') == std::string::npos) return name;
        std::string s = std::string(1, prefix) + std::to_string(index);
        mangled.emplace_back(s, name);
        return s;
    }
};

// one (name, row, value) entry per line; appends "$= p/q" when the decimal
// field is not exact
void emit_entry(std::ostream& out, const std::string& a, const std::string& b, const Rat& v) {
    auto dec = exact_decimal(v, 12);
    out << "    " << pad(a, 10) << pad(b, 10) << pad(dec ? *dec : approx_decimal(v, 12), 12);
    if (!dec) out << "  $= " << v.get_str();
    out << "\n";
}

}  // namespace

std::string export_mps(const LinearModel& model) {
    std::ostringstream out;
    NameTable names;
    int nv = model.num_variables(), nr = model.num_constraints();
    std::vector<std::string> vname(static_cast<size_t>(nv)), rname(static_cast<size_t>(nr));
    for (int j = 0; j < nv; ++j) vname[static_cast<size_t>(j)] = names.shorten(model.variable(j).name, 'V', j);
    for (int i = 0; i < nr; ++i) rname[static_cast<size_t>(i)] = names.shorten(model.row(i).name, 'C', i);

    out << "NAME          " << model.name() << "\n";
    for (const auto& [short_name, original] : names.mangled)
        out << "* LONGNAME " << short_name << " " << original << "\n";
    if (model.objective_sense() == ObjSense::Maximize) out << "OBJSENSE\n    MAX\n";
    out << "ROWS\n N  OBJ\n";
    for (int i = 0; i < nr; ++i) {
        char s = model.row(i).sense == RowSense::LE ? 'L' : model.row(i).sense == RowSense::GE ? 'G' : 'E';
        out << " " << s << "  " << rname[static_cast<size_t>(i)] << "\n";
    }

    // column-major coefficient map
    std::vector<std::map<int, Rat>> col_terms(static_cast<size_t>(nv));
    for (const auto& [v, c] : model.objective()) col_terms[static_cast<size_t>(v)][-1] += c;
    for (int i = 0; i < nr; ++i)
        for (const auto& [v, c] : model.row(i).terms) col_terms[static_cast<size_t>(v)][i] += c;

    out << "COLUMNS\n";
    bool in_int = false;
    int marker = 0;
    for (int j = 0; j < nv; ++j) {
        bool integral = model.variable(j).integral;
        if (integral != in_int) {
            out << "    MARKER" << marker++ << "    'MARKER'                 '"
                << (integral ? "INTORG" : "INTEND") << "'\n";
            in_int = integral;
        }
        auto& terms = col_terms[static_cast<size_t>(j)];
        if (terms.empty()) terms[-1] = 0;  // keep the variable visible to parsers
        for (const auto& [row, c] : terms)
            emit_entry(out, vname[static_cast<size_t>(j)], row < 0 ? "OBJ" : rname[static_cast<size_t>(row)], c);
    }
    if (in_int)
        out << "    MARKER" << marker++ << "    'MARKER'                 'INTEND'\n";

    out << "RHS\n";
    for (int i = 0; i < nr; ++i)
        if (model.row(i).rhs != 0) emit_entry(out, "RHS", rname[static_cast<size_t>(i)], model.row(i).rhs);

    out << "BOUNDS\n";
    for (int j = 0; j < nv; ++j) {
        const auto& v = model.variable(j);
        if (v.lb == v.ub) {
            auto dec = exact_decimal(v.lb, 12);
            out << " FX " << pad("BND", 10) << pad(vname[static_cast<size_t>(j)], 10)
                << pad(dec ? *dec : approx_decimal(v.lb, 12), 12);
            if (!dec) out << "  $= " << v.lb.get_str();
            out << "\n";
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            const Rat& b = side == 0 ? v.lb : v.ub;
            auto dec = exact_decimal(b, 12);
            out << (side == 0 ? " LO " : " UP ") << pad("BND", 10)
                << pad(vname[static_cast<size_t>(j)], 10) << pad(dec ? *dec : approx_decimal(b, 12), 12);
            if (!dec) out << "  $= " << b.get_str();
            out << "\n";
        }
    }
    out << "ENDATA\n";
    return out.str();
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

}  // namespace

LinearModel parse_mps(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    enum Section { None, Rows, Columns, Rhs, Bounds, ObjSense_ } section = None;

    LinearModel model;
    std::map<std::string, std::string> longnames;
    ObjSense sense = ObjSense::Minimize;
    struct RowInfo {
        RowSense sense;
        std::vector<std::pair<int, Rat>> terms;
        Rat rhs = 0;
    };
    std::vector<std::string> row_order;
    std::map<std::string, RowInfo> rows;
    std::string obj_row;
    std::vector<std::string> var_order;
    std::map<std::string, int> var_idx;
    std::vector<std::pair<int, Rat>> objective;
    std::vector<char> var_int;
    std::vector<std::optional<Rat>> var_lb, var_ub;
    bool in_int = false;
    std::string model_name = "model";

    auto resolve = [&](const std::string& name) {
        auto it = longnames.find(name);
        return it == longnames.end() ? name : it->second;
    };
    auto var_of = [&](const std::string& name) {
        auto it = var_idx.find(name);
        if (it != var_idx.end()) return it->second;
        int idx = static_cast<int>(var_order.size());
        var_order.push_back(name);
        var_idx[name] = idx;
        var_int.push_back(in_int);
        var_lb.emplace_back();
        var_ub.emplace_back();
        return idx;
    };
    auto parse_value = [&](const std::vector<std::string>& toks, size_t value_pos) -> Rat {
        for (size_t k = value_pos; k + 1 < toks.size(); ++k)
            if (toks[k] == "$=") return rat_from_string(toks[k + 1]);
        return rat_from_string(toks[value_pos]);
    };

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '*') {
            auto toks = tokenize(line);
            if (toks.size() == 4 && toks[1] == "LONGNAME") longnames[toks[2]] = toks[3];
            continue;
        }
        bool indented = line[0] == ' ' || line[0] == '\t';
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (!indented) {
            const std::string& head = toks[0];
            if (head == "NAME") {
                if (toks.size() > 1) model_name = toks[1];
            } else if (head == "ROWS")
                section = Rows;
            else if (head == "COLUMNS")
                section = Columns;
            else if (head == "RHS")
                section = Rhs;
            else if (head == "RANGES")
                throw std::invalid_argument("mps: RANGES section unsupported");
            else if (head == "BOUNDS")
                section = Bounds;
            else if (head == "OBJSENSE")
                section = ObjSense_;
            else if (head == "ENDATA")
                break;
            else
                throw std::invalid_argument("mps: unknown section " + head);
            continue;
        }
        switch (section) {
            case ObjSense_:
                if (toks[0] == "MAX" || toks[0] == "MAXIMIZE") sense = ObjSense::Maximize;
                break;
            case Rows: {
                if (toks.size() < 2) throw std::invalid_argument("mps: bad ROWS line");
                std::string rn = resolve(toks[1]);
                if (toks[0] == "N") {
                    if (obj_row.empty()) obj_row = toks[1];
                } else {
                    RowSense s = toks[0] == "L" ? RowSense::LE
                                 : toks[0] == "G" ? RowSense::GE
                                 : toks[0] == "E" ? RowSense::EQ
                                                  : throw std::invalid_argument("mps: bad row type");
                    row_order.push_back(toks[1]);
                    rows[toks[1]] = RowInfo{s, {}, Rat(0)};
                }
                break;
            }
            case Columns: {
                if (toks.size() >= 3 && toks[2] == "'INTORG'") {
                    in_int = true;
                    break;
                }
                if (toks.size() >= 3 && toks[2] == "'INTEND'") {
                    in_int = false;
                    break;
                }
                if (toks.size() < 3) throw std::invalid_argument("mps: bad COLUMNS line");
                int v = var_of(toks[0]);
                Rat c = parse_value(toks, 2);
                if (toks[1] == obj_row)
                    objective.emplace_back(v, c);
                else {
                    auto it = rows.find(toks[1]);
                    if (it == rows.end()) throw std::invalid_argument("mps: unknown row " + toks[1]);
                    it->second.terms.emplace_back(v, c);
                }
                break;
            }
            case Rhs: {
                if (toks.size() < 3) throw std::invalid_argument("mps: bad RHS line");
                auto it = rows.find(toks[1]);
                if (it == rows.end()) throw std::invalid_argument("mps: unknown RHS row " + toks[1]);
                it->second.rhs = parse_value(toks, 2);
                break;
            }
            case Bounds: {
                if (toks.size() < 3) throw std::invalid_argument("mps: bad BOUNDS line");
                const std::string& type = toks[0];
                int v = var_of(toks[2]);
                if (type == "FR" || type == "MI" || type == "PL")
                    throw std::invalid_argument("mps: unbounded variables unsupported");
                if (type == "BV") {
                    var_lb[static_cast<size_t>(v)] = Rat(0);
                    var_ub[static_cast<size_t>(v)] = Rat(1);
                    var_int[static_cast<size_t>(v)] = true;
                    break;
                }
                Rat b = parse_value(toks, 3);
                if (type == "LO")
                    var_lb[static_cast<size_t>(v)] = b;
                else if (type == "UP")
                    var_ub[static_cast<size_t>(v)] = b;
                else if (type == "FX")
                    var_lb[static_cast<size_t>(v)] = var_ub[static_cast<size_t>(v)] = b;
                else
                    throw std::invalid_argument("mps: bound type " + type + " unsupported");
                break;
            }
            case None:
                break;
        }
    }

    model.set_name(model_name);
    for (size_t j = 0; j < var_order.size(); ++j) {
        if (!var_lb[j] || !var_ub[j])
            throw std::invalid_argument("mps: variable " + var_order[j] +
                                        " lacks explicit finite bounds");
        model.add_variable(resolve(var_order[j]), *var_lb[j], *var_ub[j], var_int[j]);
    }
    for (const auto& rn : row_order) {
        const auto& info = rows[rn];
        model.add_constraint(info.terms, info.sense, info.rhs, resolve(rn));
    }
    model.set_objective(objective, sense);
    return model;
}

std::string export_lp_format(const LinearModel& model) {
    std::ostringstream out;
    out << "\\ " << model.name() << "\n";
    auto term_str = [&](const Rat& c, const std::string& name, bool first) {
        std::string s;
        Rat a = abs(c);
        s += (sgn(c) < 0) ? (first ? "- " : " - ") : (first ? "" : " + ");
        auto dec = exact_decimal(a, 18);
        s += (dec ? *dec : approx_decimal(a, 18)) + " " + name;
        return s;
    };
    std::vector<std::string> exact_notes;
    auto note_inexact = [&](const std::string& where, const std::string& name, const Rat& c) {
        if (!exact_decimal(c, 18)) exact_notes.push_back("\\ exact " + where + " " + name + " = " + c.get_str());
    };

    out << (model.objective_sense() == ObjSense::Maximize ? "Maximize\n" : "Minimize\n") << " obj:";
    bool first = true;
    for (const auto& [v, c] : model.objective()) {
        if (c == 0) continue;
        out << " " << term_str(c, model.variable(v).name, first);
        note_inexact("obj", model.variable(v).name, c);
        first = false;
    }
    if (first) out << " 0 " << model.variable(0).name;
    out << "\nSubject To\n";
    for (int i = 0; i < model.num_constraints(); ++i) {
        const auto& row = model.row(i);
        out << " " << row.name << ":";
        first = true;
        for (const auto& [v, c] : row.terms) {
            if (c == 0) continue;
            out << " " << term_str(c, model.variable(v).name, first);
            note_inexact(row.name, model.variable(v).name, c);
            first = false;
        }
        if (first) out << " 0 " << model.variable(0).name;
        const char* op = row.sense == RowSense::LE ? "<=" : row.sense == RowSense::GE ? ">=" : "=";
        auto dec = exact_decimal(row.rhs, 18);
        out << " " << op << " " << (dec ? *dec : approx_decimal(row.rhs, 18)) << "\n";
        note_inexact(row.name, "rhs", row.rhs);
    }
    out << "Bounds\n";
    for (const auto& v : model.variables()) {
        auto lo = exact_decimal(v.lb, 18), hi = exact_decimal(v.ub, 18);
        out << " " << (lo ? *lo : approx_decimal(v.lb, 18)) << " <= " << v.name << " <= "
            << (hi ? *hi : approx_decimal(v.ub, 18)) << "\n";
        note_inexact("bounds", v.name, v.lb);
        note_inexact("bounds", v.name, v.ub);
    }
    out << "Generals\n";
    for (const auto& v : model.variables())
        if (v.integral) out << " " << v.name << "\n";
    for (const auto& note : exact_notes) out << note << "\n";
    out << "End\n";
    return out.str();
}

ExternalResult parse_solution_file(const std::string& text) {
    ExternalResult res;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("Objective value =");
            if (pos != std::string::npos) {
                res.objective = rat_from_string(tokenize(line.substr(pos + 17)).at(0));
                res.solved = true;
            }
            continue;
        }
        auto toks = tokenize(line);
        if (toks.size() >= 2) res.values.emplace_back(toks[0], rat_from_string(toks[1]));
    }
    if (!res.values.empty()) res.solved = true;
    return res;
}

ExternalResult solve_with_external(const LinearModel& model, const std::string& command,
                                   const std::string& workdir) {
    std::string mps_path = workdir + "/" + model.name() + ".mps";
    std::string sol_path = workdir + "/" + model.name() + ".sol";
    {
        std::ofstream out(mps_path);
        if (!out) throw std::runtime_error("cannot write " + mps_path);
        out << export_mps(model);
    }
    std::string cmd = command + " " + mps_path + " " + sol_path;
    int rc = std::system(cmd.c_str());
    if (rc != 0) throw std::runtime_error("external solver failed: " + cmd);
    std::ifstream in(sol_path);
    if (!in) throw std::runtime_error("external solver produced no solution file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution_file(buf.str());
}

}  // namespace zf::milp
