#include "zf/drivers.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "zf/graph6.hpp"
#include "zf/simplex.hpp"

namespace zf::drivers {

using milp::SolveStatus;
using models::ZfModelKind;

Method method_from_name(const std::string& name) {
    if (name == "im" || name == "IM") return Method::IM;
    if (name == "tsm" || name == "TSM") return Method::TSM;
    if (name == "fc" || name == "FC") return Method::FC;
    if (name == "oracle") return Method::Oracle;
    throw std::invalid_argument("unknown method: " + name);
}

const char* to_string(Method m) {
    switch (m) {
        case Method::IM: return "im";
        case Method::TSM: return "tsm";
        case Method::FC: return "fc";
        case Method::Oracle: return "oracle";
    }
    return "?";
}

namespace {

void require_nonempty(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("empty graph rejected");
}

milp::SolveHints maybe(const SolverConfig& cfg, milp::SolveHints hints) {
    return cfg.hints ? std::move(hints) : milp::SolveHints{};
}

int sum_z_steps(const Graph& g, int T, const milp::Solution& sol) {
    models::TsmLayout L = models::tsm_layout(g, T);
    int total = 0;
    for (int t = 1; t <= T; ++t)
        total += static_cast<int>(rat_to_long(sol.assignment[static_cast<size_t>(L.z(t))]));
    return total;
}

}  // namespace

ZOutcome zero_forcing_number(const Graph& g, Method method, std::optional<int> T_opt,
                             const SolverConfig& cfg) {
    require_nonempty(g);
    if (g.n() == 1) return {1, 1, true, {}};
    int T = T_opt.value_or(models::default_horizon(g));
    switch (method) {
        case Method::Oracle: {
            auto z = oracle_Z(g);
            return {z.value, z.witness, true, {}};
        }
        case Method::FC: {
            auto r = zf_via_cut_generation(g, cfg);
            return {r.value, r.witness, r.exact, r.last_master};
        }
        case Method::IM: {
            auto model = models::build_im(g, T, Variant::Z);
            auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, models::im_hints(g, T, Variant::Z)));
            if (sol.status == SolveStatus::BudgetExceeded)
                return {sol.has_incumbent ? static_cast<int>(rat_to_long(sol.objective_value)) : -1,
                        0, false, sol};
            return {static_cast<int>(rat_to_long(sol.objective_value)),
                    models::extract_zfs(g, sol, ZfModelKind::IM), true, sol};
        }
        case Method::TSM: {
            auto model = models::build_tsm(g, T, Variant::Z);
            auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, models::tsm_hints(g, T, Variant::Z)));
            if (sol.status == SolveStatus::BudgetExceeded)
                return {sol.has_incumbent ? static_cast<int>(rat_to_long(sol.objective_value)) : -1,
                        0, false, sol};
            return {static_cast<int>(rat_to_long(sol.objective_value)),
                    models::extract_zfs(g, sol, ZfModelKind::TSM), true, sol};
        }
    }
    throw std::logic_error("unreachable");
}

TimedOutcome propagation(const Graph& g, Method method, Variant which, std::optional<int> T_opt,
                         const SolverConfig& cfg) {
    require_nonempty(g);
    if (which != Variant::Pt && which != Variant::PT)
        throw std::invalid_argument("propagation expects the pt or PT variant");
    if (g.n() == 1) return {1, 0, 1, true, {}};
    int T = T_opt.value_or(models::default_horizon(g));
    if (method == Method::Oracle) {
        auto summary = oracle_pt_PT(g);
        int target = which == Variant::Pt ? summary.pt : summary.PT;
        std::uint64_t witness = 0;
        for_each_subset(g.n(), summary.zero_forcing_number, [&](std::uint64_t c) {
            auto pt = propagation_time(g, c);
            if (pt && *pt == target) {
                witness = c;
                return false;
            }
            return true;
        });
        return {summary.zero_forcing_number, target, witness, true, {}};
    }
    if (method == Method::FC) throw std::invalid_argument("FC computes Z only");
    if (method == Method::IM && which == Variant::PT)
        throw std::invalid_argument(
            "IM cannot express the maximum propagation time; use the time step model");

    milp::LinearModel model = method == Method::IM ? models::build_im(g, T, which)
                                                   : models::build_tsm(g, T, which);
    auto hints = method == Method::IM ? models::im_hints(g, T, which)
                                      : models::tsm_hints(g, T, which);
    auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, std::move(hints)));
    if (sol.status == SolveStatus::BudgetExceeded) return {-1, -1, 0, false, sol};
    std::uint64_t c = models::extract_zfs(
        g, sol, method == Method::IM ? ZfModelKind::IM : ZfModelKind::TSM);
    int time;
    if (method == Method::IM) {
        models::ImLayout L = models::im_layout(g, T);
        time = static_cast<int>(rat_to_long(sol.assignment[static_cast<size_t>(L.z())]));
    } else {
        time = sum_z_steps(g, T, sol);
    }
    // the trace must replay; for TSM it must also be synchronous
    models::extract_trace(g, sol, method == Method::IM ? ZfModelKind::IM : ZfModelKind::TSM, T);
    return {std::popcount(c), time, c, true, sol};
}

TimedOutcome throttling(const Graph& g, Method method, std::optional<int> T_opt,
                        const SolverConfig& cfg) {
    require_nonempty(g);
    if (g.n() == 1) return {1, 0, 1, true, {}};
    int T = T_opt.value_or(models::default_horizon(g));
    if (method == Method::Oracle) {
        auto th = oracle_th(g);
        auto pt = propagation_time(g, th.witness);
        return {std::popcount(th.witness), *pt, th.witness, true, {}};
    }
    if (method == Method::FC) throw std::invalid_argument("FC computes Z only");
    milp::LinearModel model = method == Method::IM ? models::build_im(g, T, Variant::Th)
                                                   : models::build_tsm(g, T, Variant::Th);
    auto hints = method == Method::IM ? models::im_hints(g, T, Variant::Th)
                                      : models::tsm_hints(g, T, Variant::Th);
    auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, std::move(hints)));
    if (sol.status == SolveStatus::BudgetExceeded) return {-1, -1, 0, false, sol};
    std::uint64_t c = models::extract_zfs(
        g, sol, method == Method::IM ? ZfModelKind::IM : ZfModelKind::TSM);
    int time;
    if (method == Method::IM) {
        models::ImLayout L = models::im_layout(g, T);
        time = static_cast<int>(rat_to_long(sol.assignment[static_cast<size_t>(L.z())]));
    } else {
        time = sum_z_steps(g, T, sol);
    }
    return {std::popcount(c), time, c, true, sol};
}

CutGenResult zf_via_cut_generation(const Graph& g, const SolverConfig& cfg) {
    require_nonempty(g);
    CutGenResult out;
    FortCollection forts;
    forts.all_minimal = true;
    while (true) {
        auto master = models::build_fort_cover(g, forts, /*relaxed=*/false);
        auto sol = milp::solve_ip(master, cfg.budget);
        if (sol.status == SolveStatus::BudgetExceeded) {
            out.exact = false;
            out.state.forts = forts.forts;
            out.last_master = sol;
            if (sol.has_incumbent) out.value = static_cast<int>(rat_to_long(sol.objective_value));
            return out;
        }
        std::uint64_t c = 0;
        for (int v = 0; v < g.n(); ++v)
            if (sol.assignment[static_cast<size_t>(v)] == 1) c |= 1ULL << v;
        if (is_zfs(g, c)) {
            out.value = static_cast<int>(rat_to_long(sol.objective_value));
            out.witness = c;
            out.state.forts = forts.forts;
            out.state.log.push_back({out.state.iterations, {}, sol.objective_value});
            out.last_master = sol;
            return out;
        }
        auto separation = models::build_min_fort(g, c);
        auto fsol = milp::solve_ip(separation, cfg.budget, maybe(cfg, models::fort_model_hints(g)));
        if (fsol.status == SolveStatus::BudgetExceeded) {
            out.exact = false;
            out.state.forts = forts.forts;
            out.last_master = sol;
            return out;
        }
        if (fsol.status != SolveStatus::Optimal)
            throw std::logic_error("separation must be feasible: candidate is not a ZFS");
        std::uint64_t f = models::extract_fort(g, fsol);
        for (std::uint64_t old : forts.forts)
            if (old == f) throw std::logic_error("cut loop stalled: repeated fort");
        forts.forts.push_back(f);
        ++out.state.iterations;  // one cut per round, bounded by |minimal forts|
        out.state.log.push_back({out.state.iterations, mask_to_vertices(f), sol.objective_value});
    }
}

FractionalResult fractional_zf(const Graph& g, const SolverConfig& cfg) {
    require_nonempty(g);
    FractionalResult out;
    // incremental LP master: start with zero cover rows, add one violated
    // minimal fort per round
    auto master_model = models::build_fort_cover(g, FortCollection{{}, true}, /*relaxed=*/true);
    milp::SimplexSolver master(master_model);
    while (true) {
        if (master.solve() != milp::LpStatus::Optimal)
            throw std::logic_error("relaxed fort cover master cannot be infeasible");
        master.verify_certificate();
        std::vector<Rat> all = master.structural_values();
        std::vector<Rat> s(all.begin(), all.begin() + g.n());

        auto lmf = models::build_frac_min_fort(g, s);
        auto sep = milp::solve_ip(lmf, cfg.budget, maybe(cfg, models::fort_model_hints(g)));
        if (sep.status == SolveStatus::BudgetExceeded) {
            out.exact = false;
            out.value = master.objective();
            out.weights = s;
            return out;
        }
        if (sep.objective_value >= 1) {
            // certificate: no fort violates the weighting (Theorem on LMF optima)
            out.value = master.objective();
            out.weights = s;
            out.final_separation_value = sep.objective_value;
            out.state.log.push_back({out.state.iterations, {}, master.objective()});
            return out;
        }
        std::uint64_t f = models::extract_fort(g, sep);
        // shrink to a minimal fort: weights are nonnegative, so violation survives
        auto minimal = minimum_fort_within(g, f);
        if (!minimal) throw std::logic_error("violated fort lost during minimalization");
        f = *minimal;
        for (std::uint64_t old : out.state.forts)
            if (old == f) throw std::logic_error("fractional cut loop stalled: repeated fort");
        out.state.forts.push_back(f);
        ++out.state.iterations;
        out.state.log.push_back({out.state.iterations, mask_to_vertices(f), master.objective()});
        std::vector<std::pair<int, Rat>> terms;
        for (int v : mask_to_vertices(f)) terms.emplace_back(v, Rat(1));
        master.add_row(terms, milp::RowSense::GE, Rat(1));
    }
}

PtiResult realized_pti(const Graph& g, std::optional<int> T_override, const SolverConfig& cfg) {
    require_nonempty(g);
    if (g.n() == 1) return {{0}, true};
    int T = T_override.value_or(models::default_horizon(g));
    PtiResult out;
    int k = 0;
    while (k <= T) {
        auto model = models::build_tsm_pti(g, T, k);
        auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, models::tsm_hints(g, T, Variant::Pt, k)));
        if (sol.status == SolveStatus::BudgetExceeded) {
            out.complete = false;
            return out;
        }
        if (sol.status == SolveStatus::Infeasible) break;
        int p = sum_z_steps(g, T, sol);
        if (p < k) throw std::logic_error("PTI loop: realized time below the lower bound");
        out.realized.push_back(p);
        k = p + 1;
    }
    return out;
}

MinimalFortsResult all_minimal_forts(const Graph& g, const SolverConfig& cfg) {
    require_nonempty(g);
    MinimalFortsResult out;
    out.forts.all_minimal = true;
    while (true) {
        auto model = models::build_minimal_fort_excl(g, out.forts);
        auto sol = milp::solve_ip(model, cfg.budget, maybe(cfg, models::fort_model_hints(g)));
        if (sol.status == SolveStatus::BudgetExceeded) {
            out.complete = false;
            return out;
        }
        if (sol.status == SolveStatus::Infeasible) return out;
        std::uint64_t f = models::extract_fort(g, sol);
        // the growth theorem promises minimality; check it outright
        auto smallest = minimum_fort_within(g, f);
        if (!smallest || *smallest != f)
            throw std::logic_error("minimal fort model returned a non-minimal fort");
        out.forts.forts.push_back(f);
    }
}

FortNumberResult fort_number(const Graph& g, const SolverConfig& cfg) {
    require_nonempty(g);
    if (g.n() == 1) return {1, FortCollection{{1}, true}, true, {}};
    auto model = models::build_fort_number(g, {.symmetry_breaking = cfg.fn_symmetry_breaking});
    milp::SolveHints hints = cfg.hints ? models::fn_hints(g) : milp::SolveHints{};
    if (cfg.hints && g.n() <= 16) {
        // greedy disjoint packing of minimal forts as a warm incumbent
        auto minimal = oracle_minimal_forts(g);
        std::vector<std::uint64_t> greedy;
        std::uint64_t used = 0;
        for (std::uint64_t f : minimal.forts)
            if (!(f & used)) {
                greedy.push_back(f);
                used |= f;
            }
        models::FnLayout L = models::fn_layout(g);
        std::vector<Rat> warm(static_cast<size_t>(model.num_variables()), Rat(0));
        for (size_t i = 0; i < greedy.size(); ++i) {
            warm[static_cast<size_t>(L.z(static_cast<int>(i)))] = 1;
            for (int v : mask_to_vertices(greedy[i]))
                warm[static_cast<size_t>(L.x(static_cast<int>(i), v))] = 1;
        }
        hints.incumbent = std::move(warm);
    }
    auto sol = milp::solve_ip(model, cfg.budget, hints);
    if (sol.status == SolveStatus::BudgetExceeded) {
        FortNumberResult out;
        out.exact = false;
        out.solution = sol;
        if (sol.has_incumbent) out.value = static_cast<int>(rat_to_long(sol.objective_value));
        return out;
    }
    FortCollection packing = models::extract_packing(g, sol);
    return {static_cast<int>(rat_to_long(sol.objective_value)), std::move(packing), true, sol};
}

int mr_vertex_sum(const std::vector<ComponentRank>& components) {
    if (components.empty()) throw std::invalid_argument("vertex sum needs components");
    int total = 0, spread_sum = 0;
    for (const auto& c : components) {
        int r = c.spread();
        if (r < 0 || r > 2)
            throw std::invalid_argument("rank spread " + std::to_string(r) + " outside [0, 2]");
        total += c.mr_minus_v;
        spread_sum += r;
    }
    return total + std::min(spread_sum, 2);
}

int mr_edge_sum(const ComponentRank& g, const ComponentRank& h) {
    int rg = g.spread(), rh = h.spread();
    if (rg < 0 || rg > 2 || rh < 0 || rh > 2)
        throw std::invalid_argument("rank spread outside [0, 2]");
    if (rg == 2 || rh == 2) return g.mr + h.mr;
    return g.mr + h.mr + 1;
}

int small_order_mr(const Graph& g) {
    if (g.n() > 7)
        throw std::invalid_argument("mr = n - Z holds only for order <= 7; supply rank data");
    if (g.n() == 0) return 0;
    return g.n() - oracle_Z(g).value;
}

ComponentRank small_order_rank(const Graph& g, int v) {
    return {small_order_mr(g), small_order_mr(remove_vertex(g, v))};
}

RankTable load_rank_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rank table: " + path);
    RankTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string g6;
        RankEntry entry;
        if (!(ls >> g6 >> entry.mr)) throw std::runtime_error("bad rank table line: " + line);
        int n = parse_graph6(g6).n();
        entry.mr_minus.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            if (!(ls >> entry.mr_minus[static_cast<size_t>(i)]))
                throw std::runtime_error("rank table line lacks " + std::to_string(n) +
                                         " deleted-vertex entries: " + line);
        table[g6] = std::move(entry);
    }
    return table;
}

BoundReport m_lower_bound_report(const Graph& g, std::optional<int> max_nullity,
                                 const SolverConfig& cfg) {
    require_nonempty(g);
    BoundReport report{};
    report.ft = fort_number(g, cfg).value;
    report.z_star = fractional_zf(g, cfg).value;
    report.z = zf_via_cut_generation(g, cfg).value;
    if (max_nullity)
        report.max_nullity = max_nullity;
    else if (g.n() <= 7)
        report.max_nullity = report.z;  // M = Z at order <= 7
    Rat upper = report.max_nullity ? Rat(*report.max_nullity) : Rat(report.z);
    report.chain_holds = Rat(report.ft) <= report.z_star && report.z_star <= upper;
    return report;
}

}  // namespace zf::drivers
