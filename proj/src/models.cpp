#include "zf/models.hpp"

#include <bit>
#include <stdexcept>

#include "zf/graph6.hpp"

namespace zf::models {

using milp::LinearModel;
using milp::ObjSense;
using milp::RowSense;

const char* to_string(Variant v) {
    switch (v) {
        case Variant::Z: return "Z";
        case Variant::Pt: return "pt";
        case Variant::PT: return "PT";
        case Variant::Th: return "th";
    }
    return "?";
}

std::string graph_tag(const Graph& g) {
    // FNV-1a over the edge list; stable across runs and platforms
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    mix(static_cast<std::uint64_t>(g.n()));
    for (auto [u, v] : g.edges()) mix((static_cast<std::uint64_t>(u) << 8) | static_cast<std::uint64_t>(v));
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%012llx", static_cast<unsigned long long>(h & 0xffffffffffffULL));
    return buf;
}

int default_horizon(const Graph& g) { return g.n() - 1; }

ImLayout im_layout(const Graph& g, int T) { return {g.n(), T, 2 * g.m()}; }
TsmLayout tsm_layout(const Graph& g, int T) { return {g.n(), T, 2 * g.m()}; }
FnLayout fn_layout(const Graph& g) { return {g.n()}; }

namespace {

void require_order(const Graph& g) {
    if (g.n() < 1) throw std::invalid_argument("model needs a nonempty graph");
}

std::string vname(const char* base, int a) { return base + std::to_string(a); }
std::string vname(const char* base, int a, const char* mid, int b) {
    return base + std::to_string(a) + mid + std::to_string(b);
}

}  // namespace

LinearModel build_im(const Graph& g, int T, Variant variant) {
    require_order(g);
    if (T < 1) throw std::invalid_argument("IM horizon must be >= 1");
    if (variant == Variant::PT)
        throw std::invalid_argument(
            "IM cannot express the maximum propagation time: feasible games may idle between "
            "forces; use the time step model");
    ArcList arcs(g);
    ImLayout L = im_layout(g, T);
    LinearModel m("im_" + graph_tag(g) + "_T" + std::to_string(T) + "_" + to_string(variant));
    for (int v = 0; v < L.n; ++v) m.add_binary(vname("s", v));
    for (int v = 0; v < L.n; ++v) m.add_variable(vname("x", v), 0, T, true);
    for (int a = 0; a < L.narcs; ++a)
        m.add_binary(vname("y", arcs[a].first, "a", arcs[a].second));
    m.add_variable("z", 0, T, true);

    for (int v = 0; v < L.n; ++v) {
        std::vector<std::pair<int, Rat>> terms{{L.s(v), Rat(1)}};
        for (int a = 0; a < L.narcs; ++a)
            if (arcs[a].second == v) terms.emplace_back(L.y(a), Rat(1));
        m.add_constraint(std::move(terms), RowSense::EQ, Rat(1), vname("force", v));
    }
    for (int a = 0; a < L.narcs; ++a) {
        auto [u, v] = arcs[a];
        m.add_constraint({{L.x(u), Rat(1)}, {L.x(v), Rat(-1)}, {L.y(a), Rat(T + 1)}}, RowSense::LE,
                         Rat(T), vname("time", u, "a", v));
    }
    for (int a = 0; a < L.narcs; ++a) {
        auto [u, v] = arcs[a];
        for (int w : g.neighbors(u)) {
            if (w == v) continue;
            m.add_constraint({{L.x(w), Rat(1)}, {L.x(v), Rat(-1)}, {L.y(a), Rat(T + 1)}},
                             RowSense::LE, Rat(T),
                             vname("time", u, "a", v) + "w" + std::to_string(w));
        }
    }
    for (int v = 0; v < L.n; ++v)
        m.add_constraint({{L.x(v), Rat(1)}, {L.z(), Rat(-1)}}, RowSense::LE, Rat(0),
                         vname("horizon", v));

    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < L.n; ++v) obj.emplace_back(L.s(v), Rat(1));
    if (variant == Variant::Pt) obj.emplace_back(L.z(), Rat(1, 2 * T));
    if (variant == Variant::Th) obj.emplace_back(L.z(), Rat(1));
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

namespace {

LinearModel build_tsm_base(const Graph& g, int T, Variant variant, const std::string& name_suffix) {
    require_order(g);
    if (T < 1) throw std::invalid_argument("TSM horizon must be >= 1");
    ArcList arcs(g);
    TsmLayout L = tsm_layout(g, T);
    LinearModel m("tsm_" + graph_tag(g) + "_T" + std::to_string(T) + "_" + name_suffix);
    for (int t = 0; t <= T; ++t)
        for (int v = 0; v < L.n; ++v) m.add_binary(vname("x", v, "t", t));
    for (int t = 1; t <= T; ++t)
        for (int a = 0; a < L.narcs; ++a)
            m.add_binary(vname("y", a, "t", t));
    for (int t = 1; t <= T; ++t) m.add_binary(vname("z", t));

    // (1) uniqueness
    for (int v = 0; v < L.n; ++v) {
        std::vector<std::pair<int, Rat>> terms{{L.x(v, 0), Rat(1)}};
        for (int t = 1; t <= T; ++t)
            for (int a = 0; a < L.narcs; ++a)
                if (arcs[a].second == v) terms.emplace_back(L.y(a, t), Rat(1));
        m.add_constraint(std::move(terms), RowSense::EQ, Rat(1), vname("force", v));
    }
    // (2) and (3) precedence
    for (int t = 1; t <= T; ++t)
        for (int a = 0; a < L.narcs; ++a) {
            auto [u, v] = arcs[a];
            m.add_constraint({{L.y(a, t), Rat(1)}, {L.x(u, t - 1), Rat(-1)}}, RowSense::LE, Rat(0),
                             vname("pre", a, "t", t));
            for (int w : g.neighbors(u)) {
                if (w == v) continue;
                m.add_constraint({{L.y(a, t), Rat(1)}, {L.x(w, t - 1), Rat(-1)}}, RowSense::LE,
                                 Rat(0), vname("pre", a, "t", t) + "w" + std::to_string(w));
            }
        }
    // (4) monotone fill
    for (int t = 1; t <= T; ++t)
        for (int v = 0; v < L.n; ++v) {
            std::vector<std::pair<int, Rat>> terms{{L.x(v, t), Rat(1)}, {L.x(v, t - 1), Rat(-1)}};
            for (int a = 0; a < L.narcs; ++a)
                if (arcs[a].second == v) terms.emplace_back(L.y(a, t), Rat(-1));
            m.add_constraint(std::move(terms), RowSense::EQ, Rat(0), vname("fill", v, "t", t));
        }
    // (5) completeness: ready forces must fire
    for (int t = 1; t <= T; ++t)
        for (int a = 0; a < L.narcs; ++a) {
            auto [u, v] = arcs[a];
            std::vector<std::pair<int, Rat>> terms{{L.x(u, t - 1), Rat(1)}, {L.x(v, t - 1), Rat(-1)}};
            for (int w : g.neighbors(u))
                if (w != v) terms.emplace_back(L.x(w, t - 1), Rat(1));
            for (int b = 0; b < L.narcs; ++b)
                if (arcs[b].second == v) terms.emplace_back(L.y(b, t), Rat(-1));
            m.add_constraint(std::move(terms), RowSense::LE, Rat(g.degree(u) - 1),
                             vname("ready", a, "t", t));
        }
    // (6) and (7) step activity
    for (int t = 1; t <= T; ++t) {
        std::vector<std::pair<int, Rat>> lo, hi;
        for (int v = 0; v < L.n; ++v) {
            lo.emplace_back(L.x(v, t), Rat(1, L.n));
            lo.emplace_back(L.x(v, t - 1), Rat(-1, L.n));
            hi.emplace_back(L.x(v, t), Rat(-1));
            hi.emplace_back(L.x(v, t - 1), Rat(1));
        }
        lo.emplace_back(L.z(t), Rat(-1));
        hi.emplace_back(L.z(t), Rat(1));
        m.add_constraint(std::move(lo), RowSense::LE, Rat(0), vname("actlo", t));
        m.add_constraint(std::move(hi), RowSense::LE, Rat(0), vname("acthi", t));
    }

    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < L.n; ++v) obj.emplace_back(L.x(v, 0), Rat(1));
    switch (variant) {
        case Variant::Z: break;
        case Variant::Pt:
            for (int t = 1; t <= T; ++t) obj.emplace_back(L.z(t), Rat(1, 2 * T));
            break;
        case Variant::PT:
            for (int t = 1; t <= T; ++t) obj.emplace_back(L.z(t), Rat(-1, 2 * T));
            break;
        case Variant::Th:
            for (int t = 1; t <= T; ++t) obj.emplace_back(L.z(t), Rat(1));
            break;
    }
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

}  // namespace

LinearModel build_tsm(const Graph& g, int T, Variant variant) {
    return build_tsm_base(g, T, variant, to_string(variant));
}

LinearModel build_tsm_pti(const Graph& g, int T, int k) {
    if (k < 0 || k > T) throw std::invalid_argument("PTI lower bound must be in [0, T]");
    LinearModel m = build_tsm_base(g, T, Variant::Pt, "pti" + std::to_string(k));
    TsmLayout L = tsm_layout(g, T);
    std::vector<std::pair<int, Rat>> terms;
    for (int t = 1; t <= T; ++t) terms.emplace_back(L.z(t), Rat(1));
    m.add_constraint(std::move(terms), RowSense::GE, Rat(k), "pti");
    return m;
}

LinearModel build_fort_cover(const Graph& g, const FortCollection& forts, bool relaxed) {
    require_order(g);
    LinearModel m(std::string(relaxed ? "lfc_" : "fc_") + graph_tag(g) + "_" +
                  std::to_string(forts.size()));
    for (int v = 0; v < g.n(); ++v) m.add_variable(vname("s", v), 0, 1, !relaxed);
    int i = 0;
    for (std::uint64_t f : forts.forts) {
        if (!is_fort(g, f))
            throw std::invalid_argument("build_fort_cover: supplied set is not a fort");
        std::vector<std::pair<int, Rat>> terms;
        for (int v : mask_to_vertices(f)) terms.emplace_back(v, Rat(1));
        m.add_constraint(std::move(terms), RowSense::GE, Rat(1), vname("cover", i++));
    }
    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < g.n(); ++v) obj.emplace_back(v, Rat(1));
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

namespace {

// Shared fort region: nonemptiness plus one inequality per (v, u in N(v)).
// `x_of` maps vertex ids to variable indices so FN copies can reuse it.
void add_fort_region(LinearModel& m, const Graph& g, const std::function<int(int)>& x_of,
                     const std::string& prefix, bool add_nonempty) {
    if (add_nonempty) {
        std::vector<std::pair<int, Rat>> terms;
        for (int v = 0; v < g.n(); ++v) terms.emplace_back(x_of(v), Rat(1));
        m.add_constraint(std::move(terms), RowSense::GE, Rat(1), prefix + "nonempty");
    }
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) {
            std::vector<std::pair<int, Rat>> terms{{x_of(u), Rat(1)}, {x_of(v), Rat(-1)}};
            for (int w : g.neighbors(u))
                if (w != v) terms.emplace_back(x_of(w), Rat(1));
            m.add_constraint(std::move(terms), RowSense::GE, Rat(0),
                             prefix + "fort" + std::to_string(v) + "u" + std::to_string(u));
        }
}

}  // namespace

LinearModel build_min_fort(const Graph& g, std::uint64_t c, MinFortOptions opts) {
    require_order(g);
    LinearModel m("mf_" + graph_tag(g));
    for (int v = 0; v < g.n(); ++v) m.add_binary(vname("x", v));
    add_fort_region(m, g, [](int v) { return v; }, "", true);
    std::uint64_t zero_set = opts.fix_closure ? closure(g, c).filled() : (c & g.vertex_mask());
    for (int v : mask_to_vertices(zero_set)) m.fix_variable(v, Rat(0));
    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < g.n(); ++v) obj.emplace_back(v, Rat(1));
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

LinearModel build_frac_min_fort(const Graph& g, const std::vector<Rat>& weights) {
    require_order(g);
    if (static_cast<int>(weights.size()) != g.n())
        throw std::invalid_argument("weight vector size mismatch");
    for (const Rat& w : weights)
        if (w < 0 || w > 1) throw std::invalid_argument("vertex weight out of [0, 1]");
    LinearModel m("lmf_" + graph_tag(g));
    for (int v = 0; v < g.n(); ++v) m.add_binary(vname("x", v));
    add_fort_region(m, g, [](int v) { return v; }, "", true);
    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < g.n(); ++v) obj.emplace_back(v, weights[static_cast<size_t>(v)]);
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

LinearModel build_minimal_fort_excl(const Graph& g, const FortCollection& excl) {
    require_order(g);
    if (!excl.all_minimal && !excl.forts.empty())
        throw std::invalid_argument("exclusion collection must be flagged all-minimal");
    LinearModel m("mff_" + graph_tag(g) + "_" + std::to_string(excl.size()));
    for (int v = 0; v < g.n(); ++v) m.add_binary(vname("x", v));
    add_fort_region(m, g, [](int v) { return v; }, "", true);
    int i = 0;
    for (std::uint64_t f : excl.forts) {
        std::vector<std::pair<int, Rat>> terms;
        for (int v : mask_to_vertices(f)) terms.emplace_back(v, Rat(1));
        m.add_constraint(std::move(terms), RowSense::LE, Rat(std::popcount(f) - 1),
                         vname("nosuper", i++));
    }
    std::vector<std::pair<int, Rat>> obj;
    for (int v = 0; v < g.n(); ++v) obj.emplace_back(v, Rat(1));
    m.set_objective(std::move(obj), ObjSense::Minimize);
    return m;
}

LinearModel build_fort_number(const Graph& g, FnOptions opts) {
    require_order(g);
    FnLayout L = fn_layout(g);
    LinearModel m("fn_" + graph_tag(g));
    for (int i = 0; i < L.n; ++i) m.add_binary(vname("z", i + 1));
    for (int i = 0; i < L.n; ++i)
        for (int v = 0; v < L.n; ++v) m.add_binary(vname("x", i + 1, "v", v));

    for (int i = 0; i < L.n; ++i) {
        std::vector<std::pair<int, Rat>> terms{{L.z(i), Rat(1)}};
        for (int v = 0; v < L.n; ++v) terms.emplace_back(L.x(i, v), Rat(-1));
        m.add_constraint(std::move(terms), RowSense::LE, Rat(0), vname("nonempty", i + 1));
    }
    for (int i = 0; i < L.n; ++i)
        add_fort_region(m, g, [&](int v) { return L.x(i, v); },
                        "i" + std::to_string(i + 1) + "_", false);
    for (int v = 0; v < L.n; ++v) {
        std::vector<std::pair<int, Rat>> terms;
        for (int i = 0; i < L.n; ++i) terms.emplace_back(L.x(i, v), Rat(1));
        m.add_constraint(std::move(terms), RowSense::LE, Rat(1), vname("disjoint", v));
    }
    if (opts.symmetry_breaking)
        for (int i = 0; i + 1 < L.n; ++i)
            m.add_constraint({{L.z(i), Rat(1)}, {L.z(i + 1), Rat(-1)}}, RowSense::GE, Rat(0),
                             vname("sym", i + 1));

    std::vector<std::pair<int, Rat>> obj;
    for (int i = 0; i < L.n; ++i) obj.emplace_back(L.z(i), Rat(1));
    m.set_objective(std::move(obj), ObjSense::Maximize);
    return m;
}

// --- extraction -------------------------------------------------------------

namespace {

void require_optimal(const milp::Solution& sol) {
    if (sol.status != milp::SolveStatus::Optimal)
        throw std::invalid_argument("extraction requires an optimal solution");
}

}  // namespace

std::uint64_t extract_zfs(const Graph& g, const milp::Solution& sol, ZfModelKind kind) {
    require_optimal(sol);
    (void)kind;  // IM s-block, TSM x^0-block, and FC s-block all sit at [0, n)
    std::uint64_t c = 0;
    for (int v = 0; v < g.n(); ++v)
        if (sol.assignment[static_cast<size_t>(v)] == 1) c |= 1ULL << v;
    if (!is_zfs(g, c))
        throw std::logic_error("model/solver bug: extracted set is not a zero forcing set");
    return c;
}

ForcingTrace extract_trace(const Graph& g, const milp::Solution& sol, ZfModelKind kind, int T) {
    require_optimal(sol);
    ArcList arcs(g);
    ForcingTrace trace;
    trace.filled_at.assign(static_cast<size_t>(g.n()), -1);
    if (kind == ZfModelKind::IM) {
        ImLayout L = im_layout(g, T);
        for (int v = 0; v < g.n(); ++v)
            if (sol.assignment[static_cast<size_t>(L.s(v))] == 1) trace.initial |= 1ULL << v;
        // bucket forces by the forced vertex's time, then drop idle steps
        std::vector<std::vector<Force>> buckets(static_cast<size_t>(T + 1));
        for (int a = 0; a < L.narcs; ++a)
            if (sol.assignment[static_cast<size_t>(L.y(a))] == 1) {
                int t = static_cast<int>(rat_to_long(sol.assignment[static_cast<size_t>(L.x(arcs[a].second))]));
                buckets[static_cast<size_t>(t)].push_back({arcs[a].first, arcs[a].second});
            }
        for (int t = 1; t <= T; ++t)
            if (!buckets[static_cast<size_t>(t)].empty())
                trace.steps.push_back(std::move(buckets[static_cast<size_t>(t)]));
    } else if (kind == ZfModelKind::TSM) {
        TsmLayout L = tsm_layout(g, T);
        for (int v = 0; v < g.n(); ++v)
            if (sol.assignment[static_cast<size_t>(L.x(v, 0))] == 1) trace.initial |= 1ULL << v;
        for (int t = 1; t <= T; ++t) {
            std::vector<Force> step;
            for (int a = 0; a < L.narcs; ++a)
                if (sol.assignment[static_cast<size_t>(L.y(a, t))] == 1)
                    step.push_back({arcs[a].first, arcs[a].second});
            if (!step.empty()) trace.steps.push_back(std::move(step));
        }
    } else {
        throw std::invalid_argument("FC solutions carry no trace");
    }
    for (int v = 0; v < g.n(); ++v)
        if ((trace.initial >> v) & 1) trace.filled_at[static_cast<size_t>(v)] = 0;
    int t = 0;
    for (auto& step : trace.steps) {
        ++t;
        for (auto& f : step) trace.filled_at[static_cast<size_t>(f.forced)] = t;
    }
    if (!is_valid_trace(g, trace))
        throw std::logic_error("model/solver bug: extracted trace fails replay validation");
    if (kind == ZfModelKind::TSM) {
        // synchronous: per-step forced sets must match the simulator exactly
        ForcingTrace sync = closure(g, trace.initial);
        if (sync.step_count() != trace.step_count())
            throw std::logic_error("model/solver bug: TSM trace is not synchronous");
        for (size_t i = 0; i < trace.steps.size(); ++i) {
            std::uint64_t a = 0, b = 0;
            for (const auto& f : trace.steps[i]) a |= 1ULL << f.forced;
            for (const auto& f : sync.steps[i]) b |= 1ULL << f.forced;
            if (a != b) throw std::logic_error("model/solver bug: TSM trace is not synchronous");
        }
    }
    return trace;
}

std::uint64_t extract_fort(const Graph& g, const milp::Solution& sol) {
    require_optimal(sol);
    std::uint64_t f = 0;
    for (int v = 0; v < g.n(); ++v)
        if (sol.assignment[static_cast<size_t>(v)] == 1) f |= 1ULL << v;
    if (!is_fort(g, f)) throw std::logic_error("model/solver bug: extracted set is not a fort");
    return f;
}

FortCollection extract_packing(const Graph& g, const milp::Solution& sol) {
    require_optimal(sol);
    FnLayout L = fn_layout(g);
    FortCollection out;
    std::uint64_t used = 0;
    for (int i = 0; i < L.n; ++i) {
        if (sol.assignment[static_cast<size_t>(L.z(i))] != 1) continue;
        std::uint64_t f = 0;
        for (int v = 0; v < L.n; ++v)
            if (sol.assignment[static_cast<size_t>(L.x(i, v))] == 1) f |= 1ULL << v;
        if (!is_fort(g, f))
            throw std::logic_error("model/solver bug: packing member is not a fort");
        if (f & used) throw std::logic_error("model/solver bug: packing members overlap");
        used |= f;
        out.forts.push_back(f);
    }
    return out;
}

// --- solver hints ------------------------------------------------------------

namespace {

struct ZfsLeafSpec {
    ZfModelKind kind;
    Variant variant;
    int T;
    std::optional<int> pti_k;
};

// Bound and leaf evaluation for the set-choice block shared by IM and TSM.
// With the initial set C fixed, the synchronous game determines the whole
// model: TSM completions are exactly the synchronous trace, and for IM the
// synchronous trace minimizes z among valid completions.
milp::CallbackResult zfs_node(const milp::NodeView& nv, const Graph& g, const ArcList& arcs,
                              const ZfsLeafSpec& spec) {
    int n = g.n();
    std::uint64_t fixed1 = 0, avail = 0;
    bool all_fixed = true;
    for (int v = 0; v < n; ++v) {
        const Rat& lo = (*nv.lb)[static_cast<size_t>(v)];
        const Rat& hi = (*nv.ub)[static_cast<size_t>(v)];
        if (hi > 0) avail |= 1ULL << v;
        if (lo > 0) fixed1 |= 1ULL << v;
        if (lo != hi) all_fixed = false;
    }
    if (!is_zfs(g, avail)) return milp::CallbackResult::prune();
    if (!all_fixed) {
        Rat bound(std::popcount(fixed1));
        if (spec.variant == Variant::PT) bound -= Rat(1, 2);
        if (spec.pti_k) bound += Rat(*spec.pti_k, 2 * spec.T);
        return milp::CallbackResult::bounded(std::move(bound));
    }

    std::uint64_t c = fixed1;
    ForcingTrace trace = closure(g, c);
    int pt = trace.step_count();
    if (pt > spec.T) return milp::CallbackResult::prune();
    if (spec.pti_k && pt < *spec.pti_k) return milp::CallbackResult::prune();

    const milp::LinearModel& m = *nv.model;
    std::vector<Rat> x(static_cast<size_t>(m.num_variables()), Rat(0));
    if (spec.kind == ZfModelKind::IM) {
        ImLayout L = im_layout(g, spec.T);
        for (int v = 0; v < n; ++v) {
            if ((c >> v) & 1) x[static_cast<size_t>(L.s(v))] = 1;
            x[static_cast<size_t>(L.x(v))] = trace.filled_at[static_cast<size_t>(v)];
        }
        for (const auto& step : trace.steps)
            for (const auto& f : step)
                x[static_cast<size_t>(L.y(arcs.index_of(f.forcer, f.forced)))] = 1;
        x[static_cast<size_t>(L.z())] = pt;
    } else {
        TsmLayout L = tsm_layout(g, spec.T);
        for (int v = 0; v < n; ++v) {
            int ft = trace.filled_at[static_cast<size_t>(v)];
            for (int t = 0; t <= spec.T; ++t)
                if (ft >= 0 && ft <= t) x[static_cast<size_t>(L.x(v, t))] = 1;
        }
        int t = 0;
        for (const auto& step : trace.steps) {
            ++t;
            for (const auto& f : step)
                x[static_cast<size_t>(L.y(arcs.index_of(f.forcer, f.forced), t))] = 1;
        }
        for (int tt = 1; tt <= pt; ++tt) x[static_cast<size_t>(L.z(tt))] = 1;
    }
    return milp::CallbackResult::resolved(std::move(x));
}

}  // namespace

milp::SolveHints im_hints(const Graph& g, int T, Variant variant) {
    milp::SolveHints hints;
    ZfsLeafSpec spec{ZfModelKind::IM, variant, T, {}};
    hints.callback = [gc = g, arcs = ArcList(g), spec](const milp::NodeView& nv) {
        return zfs_node(nv, gc, arcs, spec);
    };
    for (int v = 0; v < g.n(); ++v) hints.branch_priority.push_back(v);
    hints.lp_mode = milp::LpMode::RootOnly;
    return hints;
}

milp::SolveHints tsm_hints(const Graph& g, int T, Variant variant, std::optional<int> pti_k) {
    milp::SolveHints hints;
    ZfsLeafSpec spec{ZfModelKind::TSM, variant, T, pti_k};
    hints.callback = [gc = g, arcs = ArcList(g), spec](const milp::NodeView& nv) {
        return zfs_node(nv, gc, arcs, spec);
    };
    for (int v = 0; v < g.n(); ++v) hints.branch_priority.push_back(v);
    hints.lp_mode = milp::LpMode::RootOnly;
    return hints;
}

milp::SolveHints fort_model_hints(const Graph& g) {
    milp::SolveHints hints;
    Graph gc = g;
    hints.callback = [gc](const milp::NodeView& nv) {
        std::uint64_t avail = 0;
        for (int v = 0; v < gc.n(); ++v)
            if ((*nv.ub)[static_cast<size_t>(v)] > 0) avail |= 1ULL << v;
        if (!contains_fort(gc, avail)) return milp::CallbackResult::prune();
        return milp::CallbackResult::cont();
    };
    return hints;
}

milp::SolveHints fn_hints(const Graph& g) {
    milp::SolveHints hints;
    Graph gc = g;
    FnLayout L = fn_layout(g);
    hints.callback = [gc, L](const milp::NodeView& nv) {
        int n = gc.n();
        std::uint64_t claimed = 0;  // vertices pinned into some copy
        std::vector<std::uint64_t> mine(static_cast<size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int v = 0; v < n; ++v)
                if ((*nv.lb)[static_cast<size_t>(L.x(i, v))] > 0) {
                    claimed |= 1ULL << v;
                    mine[static_cast<size_t>(i)] |= 1ULL << v;
                }
        int capable = 0;
        for (int i = 0; i < n; ++i) {
            std::uint64_t avail = mine[static_cast<size_t>(i)];
            for (int v = 0; v < n; ++v)
                if ((*nv.ub)[static_cast<size_t>(L.x(i, v))] > 0 &&
                    !((claimed & ~mine[static_cast<size_t>(i)]) >> v & 1))
                    avail |= 1ULL << v;
            bool ok = contains_fort(gc, avail);
            if (!ok && (*nv.lb)[static_cast<size_t>(L.z(i))] > 0)
                return milp::CallbackResult::prune();
            if (ok && (*nv.ub)[static_cast<size_t>(L.z(i))] > 0) ++capable;
        }
        return milp::CallbackResult::bounded(Rat(capable));
    };
    for (int i = 0; i < L.n; ++i) hints.branch_priority.push_back(L.z(i));
    return hints;
}

}  // namespace zf::models
