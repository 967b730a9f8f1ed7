#include "zf/report.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "zf/graph6.hpp"
#include "zf/mps.hpp"

namespace zf::report {

namespace fs = std::filesystem;
using models::Variant;
using nlohmann::json;

Format format_from_name(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "markdown" || name == "md") return Format::Markdown;
    throw std::invalid_argument("unknown format: " + name);
}

void Table::write(std::ostream& out, Format format) const {
    if (format == Format::Csv) {
        for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
            out << "\n";
        }
        return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
        out << "|";
        for (const auto& c : cells) out << " " << c << " |";
        out << "\n";
    };
    line(header);
    std::vector<std::string> rule(header.size(), "---");
    line(rule);
    for (const auto& row : rows) line(row);
}

std::string cell(const Rat& value) { return rat_to_string(value); }
std::string cell_decimal(const Rat& value) { return rat_to_decimal(value, 6); }

std::string cell_vertices(std::uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_to_vertices(mask)) {
        if (!first) out += " ";
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

std::vector<LabeledGraph> load_family_spec(const std::string& spec) {
    // "name:size" or "name:lo..hi"
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("family spec must be name:size or name:lo..hi");
    Family kind = family_from_name(spec.substr(0, colon));
    std::string range = spec.substr(colon + 1);
    int lo, hi;
    auto dots = range.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stoi(range);
    } else {
        lo = std::stoi(range.substr(0, dots));
        hi = std::stoi(range.substr(dots + 2));
    }
    std::vector<LabeledGraph> out;
    for (int size = lo; size <= hi; ++size)
        out.push_back({spec.substr(0, colon) + ":" + std::to_string(size), family(kind, size)});
    return out;
}

std::vector<LabeledGraph> load_random_spec(const std::string& spec) {
    // "n,p,seed" or "n,p,seed,count"
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3 && parts.size() != 4)
        throw std::invalid_argument("random spec must be n,p,seed[,count]");
    int n = std::stoi(parts[0]);
    std::uint64_t seed = std::stoull(parts[2]);
    int count = parts.size() == 4 ? std::stoi(parts[3]) : 1;
    std::vector<LabeledGraph> out;
    for (int i = 0; i < count; ++i) {
        Graph g = random_gnp(n, parts[1], seed + static_cast<std::uint64_t>(i));
        out.push_back({encode_graph6(g), g});
    }
    return out;
}

std::vector<LabeledGraph> load_graph6_input(const std::string& path) {
    std::vector<LabeledGraph> out;
    for (const auto& line : read_graph6_lines(path)) out.push_back({line, parse_graph6(line)});
    return out;
}

void parallel_for(int n_items, int workers, const std::function<void(int)>& fn) {
    if (workers <= 1 || n_items <= 1) {
        for (int i = 0; i < n_items; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= n_items) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int count = std::min(workers, n_items);
    pool.reserve(static_cast<size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

std::string seconds_cell(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", s);
    return buf;
}

struct ValueSlot {
    Rat value;
    double seconds = 0.0;
    bool exact = true;
    bool filled = false;
};

bool method_supports(const std::string& param, drivers::Method m) {
    using drivers::Method;
    if (param == "Z") return true;
    if (param == "pt" || param == "th") return m != Method::FC;
    if (param == "PT") return m == Method::TSM || m == Method::Oracle;
    return false;
}

}  // namespace

CommandResult cmd_params(const std::vector<LabeledGraph>& inputs, const RunOptions& opts) {
    CommandResult result;
    const auto& params = opts.params;
    std::vector<drivers::Method> methods = opts.methods;
    if (methods.empty())
        methods = {drivers::Method::IM, drivers::Method::TSM, drivers::Method::FC};

    struct Col {
        std::string param;
        drivers::Method method;
    };
    std::vector<Col> cols;
    for (const auto& p : params) {
        if (p == "Zstar" || p == "ft") {
            cols.push_back({p, drivers::Method::FC});
            continue;
        }
        for (auto m : methods)
            if (method_supports(p, m)) cols.push_back({p, m});
    }
    if (cols.empty()) throw std::invalid_argument("no supported (parameter, model) pairs requested");

    result.table.header = {"graph", "n", "m"};
    for (const auto& c : cols) {
        std::string base = c.param == "Zstar" || c.param == "ft"
                               ? c.param
                               : c.param + "_" + drivers::to_string(c.method);
        result.table.header.push_back(base);
        result.table.header.push_back(base + "_sec");
    }
    for (const auto& p : params) result.table.header.push_back(p + "_agree");

    int ng = static_cast<int>(inputs.size());
    std::vector<std::vector<ValueSlot>> values(static_cast<size_t>(ng),
                                               std::vector<ValueSlot>(cols.size()));
    std::vector<std::vector<std::string>> agree(static_cast<size_t>(ng));
    std::vector<std::vector<std::string>> logs(static_cast<size_t>(ng));

    parallel_for(ng, opts.workers, [&](int gi) {
        const Graph& g = inputs[static_cast<size_t>(gi)].graph;
        auto& slots = values[static_cast<size_t>(gi)];
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            const auto& col = cols[ci];
            auto t0 = std::chrono::steady_clock::now();
            Rat value;
            bool exact = true;
            if (col.param == "Z") {
                auto r = drivers::zero_forcing_number(g, col.method, opts.T, opts.solver);
                value = r.value;
                exact = r.exact;
            } else if (col.param == "pt" || col.param == "PT") {
                auto r = drivers::propagation(
                    g, col.method, col.param == "pt" ? Variant::Pt : Variant::PT, opts.T,
                    opts.solver);
                value = r.time;
                exact = r.exact;
            } else if (col.param == "th") {
                auto r = drivers::throttling(g, col.method, opts.T, opts.solver);
                value = r.set_size + r.time;
                exact = r.exact;
            } else if (col.param == "Zstar") {
                auto r = drivers::fractional_zf(g, opts.solver);
                value = r.value;
                exact = r.exact;
            } else if (col.param == "ft") {
                auto r = drivers::fort_number(g, opts.solver);
                value = r.value;
                exact = r.exact;
            } else {
                throw std::invalid_argument("unknown parameter: " + col.param);
            }
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            slots[ci] = {value, secs, exact, true};
            json rec{{"graph", inputs[static_cast<size_t>(gi)].label},
                     {"param", col.param},
                     {"value", rat_to_string(value)},
                     {"seconds", secs},
                     {"exact", exact}};
            rec["model"] = col.param == "Zstar" ? "lfc-cutgen"
                            : col.param == "ft" ? "fn"
                                                : drivers::to_string(col.method);
            logs[static_cast<size_t>(gi)].push_back(rec.dump());
        }
        // agreement per parameter: all model values equal, and equal to the
        // oracle when the order is within the cap
        auto& flags = agree[static_cast<size_t>(gi)];
        for (const auto& p : params) {
            std::optional<Rat> reference;
            bool ok = true;
            int cap = p == "th" ? std::min(opts.oracle_cap, 12) : opts.oracle_cap;
            if (g.n() <= cap) {
                if (p == "Z")
                    reference = Rat(oracle_Z(g).value);
                else if (p == "pt")
                    reference = Rat(oracle_pt_PT(g).pt);
                else if (p == "PT")
                    reference = Rat(oracle_pt_PT(g).PT);
                else if (p == "th")
                    reference = Rat(oracle_th(g).value);
                else if (p == "Zstar" && g.n() <= opts.oracle_cap) {
                    auto full = oracle_minimal_forts(g);
                    auto lp = milp::solve_lp(models::build_fort_cover(g, full, true));
                    reference = lp.objective_value;
                } else if (p == "ft")
                    reference = Rat(oracle_ft(g).value);
            }
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                if (cols[ci].param != p || !slots[ci].filled) continue;
                if (!slots[ci].exact) ok = false;
                if (!reference && slots[ci].exact) reference = slots[ci].value;
                if (reference && slots[ci].exact && slots[ci].value != *reference) ok = false;
            }
            flags.push_back(ok ? "ok" : "MISMATCH");
        }
    });

    std::vector<Rat> sums(cols.size(), Rat(0));
    std::vector<double> sec_sums(cols.size(), 0.0);
    for (int gi = 0; gi < ng; ++gi) {
        const auto& in = inputs[static_cast<size_t>(gi)];
        std::vector<std::string> row{in.label, std::to_string(in.graph.n()),
                                     std::to_string(in.graph.m())};
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            const auto& s = values[static_cast<size_t>(gi)][ci];
            row.push_back(s.exact ? cell(s.value) : "budget");
            row.push_back(seconds_cell(s.seconds));
            sums[ci] += s.value;
            sec_sums[ci] += s.seconds;
            if (!s.exact) result.budget_hit = true;
        }
        for (const auto& f : agree[static_cast<size_t>(gi)]) {
            row.push_back(f);
            if (f != "ok") result.ok = false;
        }
        result.table.rows.push_back(std::move(row));
        for (auto& l : logs[static_cast<size_t>(gi)]) result.jsonl.push_back(std::move(l));
    }
    if (ng > 1) {
        std::vector<std::string> avg{"average", "", ""};
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            avg.push_back(cell(sums[ci] / ng));
            avg.push_back(seconds_cell(sec_sums[ci] / ng));
        }
        for (size_t i = 0; i < params.size(); ++i) avg.push_back("");
        result.table.rows.push_back(std::move(avg));
    }
    if (result.budget_hit) result.ok = false;
    return result;
}

CommandResult cmd_pti(const std::vector<LabeledGraph>& inputs, const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"graph", "n", "pt", "PT", "realized", "complete", "agree"};
    int ng = static_cast<int>(inputs.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(ng));
    std::vector<std::string> logs(static_cast<size_t>(ng));
    parallel_for(ng, opts.workers, [&](int gi) {
        const auto& in = inputs[static_cast<size_t>(gi)];
        auto r = drivers::realized_pti(in.graph, opts.T, opts.solver);
        std::string realized = "{";
        for (size_t i = 0; i < r.realized.size(); ++i)
            realized += (i ? " " : "") + std::to_string(r.realized[i]);
        realized += "}";
        std::string agree = "ok";
        if (in.graph.n() <= opts.oracle_cap && in.graph.n() <= 10) {
            auto summary = oracle_pt_PT(in.graph);
            if (summary.realized != r.realized || !r.complete) agree = "MISMATCH";
        } else if (!r.complete) {
            agree = "budget";
        }
        rows[static_cast<size_t>(gi)] = {
            in.label,
            std::to_string(in.graph.n()),
            r.realized.empty() ? "-" : std::to_string(r.realized.front()),
            r.realized.empty() ? "-" : std::to_string(r.realized.back()),
            realized,
            r.complete ? "yes" : "no",
            agree};
        logs[static_cast<size_t>(gi)] =
            json{{"graph", in.label}, {"realized", r.realized}, {"complete", r.complete}}.dump();
    });
    for (int gi = 0; gi < ng; ++gi) {
        if (rows[static_cast<size_t>(gi)][6] == "MISMATCH") result.ok = false;
        if (rows[static_cast<size_t>(gi)][5] == "no") result.budget_hit = true;
        result.table.rows.push_back(std::move(rows[static_cast<size_t>(gi)]));
        result.jsonl.push_back(std::move(logs[static_cast<size_t>(gi)]));
    }
    if (result.budget_hit) result.ok = false;
    return result;
}

CommandResult cmd_forts(const std::vector<LabeledGraph>& inputs, const RunOptions& opts, bool list) {
    CommandResult result;
    result.table.header = {"graph", "n", "minimal_forts", "complete", "agree"};
    if (list) result.table.header.push_back("forts");
    int ng = static_cast<int>(inputs.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(ng));
    parallel_for(ng, opts.workers, [&](int gi) {
        const auto& in = inputs[static_cast<size_t>(gi)];
        auto r = drivers::all_minimal_forts(in.graph, opts.solver);
        std::string agree = "ok";
        if (in.graph.n() <= opts.oracle_cap) {
            auto oracle = oracle_minimal_forts(in.graph);
            auto sorted = r.forts.forts;
            std::sort(sorted.begin(), sorted.end());
            auto expect = oracle.forts;
            std::sort(expect.begin(), expect.end());
            if (sorted != expect || !r.complete) agree = "MISMATCH";
        } else if (!r.complete) {
            agree = "budget";
        }
        std::vector<std::string> row{in.label, std::to_string(in.graph.n()),
                                     std::to_string(r.forts.size()), r.complete ? "yes" : "no",
                                     agree};
        if (list) {
            std::string all;
            for (size_t i = 0; i < r.forts.forts.size(); ++i)
                all += (i ? ";" : "") + cell_vertices(r.forts.forts[i]);
            row.push_back(all);
        }
        rows[static_cast<size_t>(gi)] = std::move(row);
    });
    for (auto& row : rows) {
        if (row[4] == "MISMATCH") result.ok = false;
        if (row[3] == "no") result.budget_hit = true;
        result.table.rows.push_back(std::move(row));
    }
    if (result.budget_hit) result.ok = false;
    return result;
}

CommandResult cmd_ft(const std::vector<LabeledGraph>& inputs, const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"graph", "n", "ft", "packing", "agree"};
    int ng = static_cast<int>(inputs.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(ng));
    parallel_for(ng, opts.workers, [&](int gi) {
        const auto& in = inputs[static_cast<size_t>(gi)];
        auto r = drivers::fort_number(in.graph, opts.solver);
        std::string packing;
        for (size_t i = 0; i < r.packing.forts.size(); ++i)
            packing += (i ? ";" : "") + cell_vertices(r.packing.forts[i]);
        std::string agree = "ok";
        if (!r.exact)
            agree = "budget";
        else if (in.graph.n() <= opts.oracle_cap && oracle_ft(in.graph).value != r.value)
            agree = "MISMATCH";
        rows[static_cast<size_t>(gi)] = {in.label, std::to_string(in.graph.n()),
                                         r.exact ? std::to_string(r.value) : "budget", packing,
                                         agree};
    });
    for (auto& row : rows) {
        if (row[4] == "MISMATCH") result.ok = false;
        if (row[4] == "budget") result.budget_hit = true;
        result.table.rows.push_back(std::move(row));
    }
    if (result.budget_hit) result.ok = false;
    return result;
}

CommandResult cmd_zstar(const std::vector<LabeledGraph>& inputs, const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"graph", "n", "Zstar", "Zstar_dec", "cuts", "agree"};
    int ng = static_cast<int>(inputs.size());
    std::vector<std::vector<std::string>> rows(static_cast<size_t>(ng));
    parallel_for(ng, opts.workers, [&](int gi) {
        const auto& in = inputs[static_cast<size_t>(gi)];
        auto r = drivers::fractional_zf(in.graph, opts.solver);
        std::string agree = r.exact ? "ok" : "budget";
        if (r.exact && in.graph.n() <= opts.oracle_cap) {
            auto lp = milp::solve_lp(
                models::build_fort_cover(in.graph, oracle_minimal_forts(in.graph), true));
            if (lp.objective_value != r.value) agree = "MISMATCH";
        }
        rows[static_cast<size_t>(gi)] = {in.label, std::to_string(in.graph.n()), cell(r.value),
                                         cell_decimal(r.value),
                                         std::to_string(r.state.forts.size()), agree};
    });
    for (auto& row : rows) {
        if (row[5] == "MISMATCH") result.ok = false;
        if (row[5] == "budget") result.budget_hit = true;
        result.table.rows.push_back(std::move(row));
    }
    if (result.budget_hit) result.ok = false;
    return result;
}

CommandResult cmd_tree_study(const std::string& corpus_dir, int n_lo, int n_hi,
                             const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"n",         "path_forts", "max_forts", "argmax",
                           "max_degree", "diameter",   "ratio",     "star_is_max"};
    for (int n = n_lo; n <= n_hi; ++n) {
        char name[32];
        std::snprintf(name, sizeof(name), "trees%02d.g6", n);
        fs::path file = fs::path(corpus_dir) / name;
        if (!fs::exists(file))
            throw std::runtime_error("tree corpus file missing: " + file.string());
        auto trees = load_graph6_input(file.string());
        if (trees.empty()) throw std::runtime_error("tree corpus file empty: " + file.string());
        std::vector<int> counts(trees.size(), 0);
        parallel_for(static_cast<int>(trees.size()), opts.workers, [&](int i) {
            auto r = drivers::all_minimal_forts(trees[static_cast<size_t>(i)].graph, opts.solver);
            if (!r.complete) throw std::runtime_error("budget hit during tree study");
            counts[static_cast<size_t>(i)] = r.forts.size();
        });
        int best = -1, best_idx = -1, ties = 0;
        for (size_t i = 0; i < counts.size(); ++i) {
            if (counts[i] > best) {
                best = counts[i];
                best_idx = static_cast<int>(i);
                ties = 1;
            } else if (counts[i] == best) {
                ++ties;
            }
        }
        const Graph& argmax = trees[static_cast<size_t>(best_idx)].graph;
        auto path_forts = drivers::all_minimal_forts(family(Family::Path, n), opts.solver);
        if (!path_forts.complete) throw std::runtime_error("budget hit on path fort count");
        bool star_is_max = ties == 1 && max_degree(argmax) == n - 1;
        if (!star_is_max) result.ok = false;
        Rat ratio = Rat(best) / Rat(path_forts.forts.size());
        result.table.rows.push_back({std::to_string(n), std::to_string(path_forts.forts.size()),
                                     std::to_string(best), trees[static_cast<size_t>(best_idx)].label,
                                     std::to_string(max_degree(argmax)),
                                     std::to_string(diameter(argmax)), cell_decimal(ratio),
                                     star_is_max ? "yes" : "no"});
        result.jsonl.push_back(json{{"n", n},
                                    {"path_forts", path_forts.forts.size()},
                                    {"max_forts", best},
                                    {"argmax", trees[static_cast<size_t>(best_idx)].label}}
                                   .dump());
    }
    return result;
}

namespace {

void nullity_row(CommandResult& result, const std::string& label, const Graph& g,
                 std::optional<int> M, const RunOptions& opts) {
    auto rep = drivers::m_lower_bound_report(g, M, opts.solver);
    if (!rep.chain_holds) result.ok = false;
    result.table.rows.push_back({label, std::to_string(g.n()), std::to_string(rep.ft),
                                 cell(rep.z_star), cell_decimal(rep.z_star),
                                 rep.max_nullity ? std::to_string(*rep.max_nullity) : "-",
                                 std::to_string(rep.z), rep.chain_holds ? "holds" : "VIOLATED"});
}

}  // namespace

CommandResult cmd_nullity_sums(const NullityOptions& nopts, const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"graph", "n", "ft", "Zstar", "Zstar_dec", "M", "Z", "chain"};
    std::mt19937_64 rng(nopts.seed);

    if (!nopts.e_fixtures.empty()) {
        auto table = drivers::load_rank_table(nopts.rank_table);
        auto lines = read_graph6_lines(nopts.e_fixtures);
        std::vector<Graph> graphs;
        std::vector<drivers::RankEntry> ranks;
        for (const auto& line : lines) {
            auto it = table.find(line);
            if (it == table.end())
                throw std::runtime_error("rank table lacks fixture graph " + line);
            graphs.push_back(parse_graph6(line));
            ranks.push_back(it->second);
        }
        for (size_t i = 0; i < graphs.size(); ++i)
            nullity_row(result, lines[i], graphs[i], graphs[i].n() - ranks[i].mr, opts);
        // seeded vertex and edge sums over all ordered pairs
        for (int kind = 0; kind < 2; ++kind)
            for (size_t i = 0; i < graphs.size(); ++i)
                for (size_t j = 0; j < graphs.size(); ++j) {
                    int u = static_cast<int>(rng() % static_cast<std::uint64_t>(graphs[i].n()));
                    int u2 = static_cast<int>(rng() % static_cast<std::uint64_t>(graphs[j].n()));
                    drivers::ComponentRank a{ranks[i].mr, ranks[i].mr_minus[static_cast<size_t>(u)]};
                    drivers::ComponentRank b{ranks[j].mr, ranks[j].mr_minus[static_cast<size_t>(u2)]};
                    Graph sum = kind == 0 ? vertex_sum(graphs[i], u, graphs[j], u2)
                                          : edge_sum(graphs[i], u, graphs[j], u2);
                    int mr = kind == 0 ? drivers::mr_vertex_sum({a, b}) : drivers::mr_edge_sum(a, b);
                    std::string label = (kind == 0 ? "vsum(" : "esum(") + std::to_string(i + 1) +
                                        "," + std::to_string(j + 1) + ")";
                    nullity_row(result, label, sum, sum.n() - mr, opts);
                }
        return result;
    }

    // degraded mode: order <= 7 corpus where M = Z, plus small seeded sums
    // whose minimum rank the sum formulas and the identity must agree on
    for (int n = 4; n <= 7; ++n) {
        fs::path file = fs::path(nopts.corpus_dir) / ("graphs" + std::to_string(n) + ".g6");
        if (!fs::exists(file)) continue;
        auto graphs = load_graph6_input(file.string());
        std::vector<CommandResult> partial(graphs.size());
        parallel_for(static_cast<int>(graphs.size()), opts.workers, [&](int i) {
            partial[static_cast<size_t>(i)].table.header = result.table.header;
            nullity_row(partial[static_cast<size_t>(i)], graphs[static_cast<size_t>(i)].label,
                        graphs[static_cast<size_t>(i)].graph, {}, opts);
        });
        for (auto& p : partial) {
            if (!p.ok) result.ok = false;
            for (auto& row : p.table.rows) result.table.rows.push_back(std::move(row));
        }
    }
    // connected order-4 vertex sums (order 7) and order-3 x order-4 edge sums
    {
        fs::path f4 = fs::path(nopts.corpus_dir) / "graphs4.g6";
        if (fs::exists(f4)) {
            auto all4 = load_graph6_input(f4.string());
            std::vector<LabeledGraph> c4, c3;
            for (auto& lg : all4)
                if (is_connected(lg.graph)) c4.push_back(lg);
            c3.push_back({"path:3", family(Family::Path, 3)});
            c3.push_back({"complete:3", family(Family::Complete, 3)});
            for (const auto& a : c4)
                for (const auto& b : c4) {
                    int u = static_cast<int>(rng() % 4), u2 = static_cast<int>(rng() % 4);
                    Graph sum = vertex_sum(a.graph, u, b.graph, u2);
                    int mr = drivers::mr_vertex_sum({drivers::small_order_rank(a.graph, u),
                                                     drivers::small_order_rank(b.graph, u2)});
                    if (mr != drivers::small_order_mr(sum)) {
                        result.ok = false;
                        result.jsonl.push_back(json{{"error", "vertex-sum rank mismatch"},
                                                    {"a", a.label},
                                                    {"b", b.label}}
                                                   .dump());
                    }
                    nullity_row(result, "vsum(" + a.label + "," + b.label + ")", sum,
                                sum.n() - mr, opts);
                }
            for (const auto& a : c3)
                for (const auto& b : c4) {
                    int u = static_cast<int>(rng() % 3), u2 = static_cast<int>(rng() % 4);
                    Graph sum = edge_sum(a.graph, u, b.graph, u2);
                    int mr = drivers::mr_edge_sum(drivers::small_order_rank(a.graph, u),
                                                  drivers::small_order_rank(b.graph, u2));
                    if (mr != drivers::small_order_mr(sum)) {
                        result.ok = false;
                        result.jsonl.push_back(json{{"error", "edge-sum rank mismatch"},
                                                    {"a", a.label},
                                                    {"b", b.label}}
                                                   .dump());
                    }
                    nullity_row(result, "esum(" + a.label + "," + b.label + ")", sum,
                                sum.n() - mr, opts);
                }
        }
    }
    return result;
}

CommandResult cmd_export(const std::vector<LabeledGraph>& inputs, const ExportOptions& eopts,
                         const RunOptions& opts) {
    CommandResult result;
    result.table.header = {"graph", "model", "mps", "lp", "roundtrip", "external"};
    fs::create_directories(eopts.output_dir);
    for (const auto& in : inputs) {
        for (const auto& kind : eopts.kinds) {
            int T = opts.T.value_or(models::default_horizon(in.graph));
            milp::LinearModel model =
                kind == "im"    ? models::build_im(in.graph, T, Variant::Z)
                : kind == "tsm" ? models::build_tsm(in.graph, T, Variant::Z)
                : kind == "fc"
                    ? models::build_fort_cover(in.graph, oracle_minimal_forts(in.graph), false)
                    : throw std::invalid_argument("export kinds are im, tsm, fc");
            fs::path mps_path = fs::path(eopts.output_dir) / (model.name() + ".mps");
            fs::path lp_path = fs::path(eopts.output_dir) / (model.name() + ".lp");
            std::string mps = milp::export_mps(model);
            {
                std::ofstream out(mps_path);
                out << mps;
            }
            {
                std::ofstream out(lp_path);
                out << milp::export_lp_format(model);
            }
            bool roundtrip = milp::parse_mps(mps) == model;
            if (!roundtrip) result.ok = false;
            std::string external = "-";
            if (!eopts.external_solver.empty()) {
                auto ext = milp::solve_with_external(model, eopts.external_solver, eopts.output_dir);
                auto own = milp::solve_ip(model, opts.solver.budget);
                external = ext.solved && own.status == milp::SolveStatus::Optimal &&
                                   ext.objective == own.objective_value
                               ? "match"
                               : "MISMATCH";
                if (external == "MISMATCH") result.ok = false;
            }
            result.table.rows.push_back({in.label, model.name(), mps_path.string(),
                                         lp_path.string(), roundtrip ? "ok" : "MISMATCH",
                                         external});
        }
    }
    return result;
}

}  // namespace zf::report
