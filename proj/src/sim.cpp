#include "zf/sim.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zf {

std::uint64_t ForcingTrace::filled() const {
    std::uint64_t f = initial;
    for (const auto& step : steps)
        for (const auto& force : step) f |= 1ULL << force.forced;
    return f;
}

ForcingTrace closure(const Graph& g, std::uint64_t c) {
    ForcingTrace trace;
    trace.initial = c & g.vertex_mask();
    trace.filled_at.assign(static_cast<size_t>(g.n()), -1);
    for (int v = 0; v < g.n(); ++v)
        if ((trace.initial >> v) & 1) trace.filled_at[static_cast<size_t>(v)] = 0;

    std::uint64_t filled = trace.initial;
    int t = 0;
    while (true) {
        std::vector<Force> forces;
        std::uint64_t newly = 0;
        std::uint64_t grays = filled;
        while (grays) {
            int u = std::countr_zero(grays);
            grays &= grays - 1;
            std::uint64_t white = g.adj(u) & ~filled;
            if (std::popcount(white) == 1) {
                int v = std::countr_zero(white);
                if (!((newly >> v) & 1)) {  // smallest-index forcer wins
                    forces.push_back({u, v});
                    newly |= 1ULL << v;
                }
            }
        }
        if (!newly) break;
        ++t;
        for (const auto& f : forces) trace.filled_at[static_cast<size_t>(f.forced)] = t;
        trace.steps.push_back(std::move(forces));
        filled |= newly;
    }
    return trace;
}

bool is_zfs(const Graph& g, std::uint64_t c) { return closure(g, c).filled() == g.vertex_mask(); }

std::optional<int> propagation_time(const Graph& g, std::uint64_t c) {
    ForcingTrace trace = closure(g, c);
    if (trace.filled() != g.vertex_mask()) return std::nullopt;
    return trace.step_count();
}

bool is_fort(const Graph& g, std::uint64_t f) {
    f &= g.vertex_mask();
    if (!f) return false;
    std::uint64_t outside = g.vertex_mask() & ~f;
    while (outside) {
        int u = std::countr_zero(outside);
        outside &= outside - 1;
        if (std::popcount(g.adj(u) & f) == 1) return false;
    }
    return true;
}

bool contains_fort(const Graph& g, std::uint64_t within) {
    // A set is a ZFS iff it meets every fort, so forts inside `within` exist
    // exactly when the complement fails to force.
    return !is_zfs(g, g.vertex_mask() & ~within);
}

void for_each_subset(int n, int k, const std::function<bool(std::uint64_t)>& fn) {
    if (k > n || k < 0) return;
    std::vector<int> c(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<size_t>(i)] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (int v : c) mask |= 1ULL << v;
        if (!fn(mask)) return;
        if (k == 0) return;
        int i = k - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
}

std::optional<std::uint64_t> minimum_fort_within(const Graph& g, std::uint64_t within) {
    within &= g.vertex_mask();
    if (!contains_fort(g, within)) return std::nullopt;
    std::vector<int> verts = mask_to_vertices(within);
    int nv = static_cast<int>(verts.size());
    std::optional<std::uint64_t> found;
    for (int k = 1; k <= nv && !found; ++k) {
        for_each_subset(nv, k, [&](std::uint64_t sub) {
            std::uint64_t f = 0;
            std::uint64_t s = sub;
            while (s) {
                int i = std::countr_zero(s);
                s &= s - 1;
                f |= 1ULL << verts[static_cast<size_t>(i)];
            }
            if (is_fort(g, f)) {
                found = f;
                return false;
            }
            return true;
        });
    }
    return found;
}

bool is_valid_trace(const Graph& g, const ForcingTrace& trace) {
    if (static_cast<int>(trace.filled_at.size()) != g.n()) return false;
    std::uint64_t filled = trace.initial & g.vertex_mask();
    if (filled != trace.initial) return false;
    for (int v = 0; v < g.n(); ++v) {
        int expect = ((trace.initial >> v) & 1) ? 0 : -1;
        if (expect == 0 && trace.filled_at[static_cast<size_t>(v)] != 0) return false;
    }
    int t = 0;
    for (const auto& step : trace.steps) {
        ++t;
        if (step.empty()) return false;
        std::uint64_t newly = 0;
        for (const auto& f : step) {
            if (f.forcer < 0 || f.forcer >= g.n() || f.forced < 0 || f.forced >= g.n()) return false;
            std::uint64_t vbit = 1ULL << f.forced;
            if ((filled | newly) & vbit) return false;        // forced at most once
            if (!((filled >> f.forcer) & 1)) return false;    // forcer gray at step start
            if (!g.has_edge(f.forcer, f.forced)) return false;
            if (g.adj(f.forcer) & ~filled & ~vbit) return false;  // unique white neighbor
            if (trace.filled_at[static_cast<size_t>(f.forced)] != t) return false;
            newly |= vbit;
        }
        filled |= newly;
    }
    for (int v = 0; v < g.n(); ++v) {
        bool in = (filled >> v) & 1;
        if (in != (trace.filled_at[static_cast<size_t>(v)] >= 0)) return false;
    }
    return true;
}

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.n() > cap)
        throw std::invalid_argument(std::string(what) + ": order " + std::to_string(g.n()) +
                                    " exceeds oracle cap " + std::to_string(cap));
}

}  // namespace

ZWitness oracle_Z(const Graph& g, const OracleLimits& limits) {
    check_cap(g, limits.z_cap, "oracle_Z");
    for (int k = 0; k <= g.n(); ++k) {
        std::optional<std::uint64_t> hit;
        for_each_subset(g.n(), k, [&](std::uint64_t c) {
            if (is_zfs(g, c)) {
                hit = c;
                return false;
            }
            return true;
        });
        if (hit) return {k, *hit};
    }
    throw std::logic_error("oracle_Z: V itself must be a zero forcing set");
}

PtSummary oracle_pt_PT(const Graph& g, const OracleLimits& limits) {
    check_cap(g, limits.z_cap, "oracle_pt_PT");
    ZWitness z = oracle_Z(g, limits);
    std::vector<int> realized;
    for_each_subset(g.n(), z.value, [&](std::uint64_t c) {
        if (auto pt = propagation_time(g, c)) realized.push_back(*pt);
        return true;
    });
    std::sort(realized.begin(), realized.end());
    realized.erase(std::unique(realized.begin(), realized.end()), realized.end());
    return {z.value, realized.front(), realized.back(), realized};
}

ZWitness oracle_th(const Graph& g, const OracleLimits& limits) {
    check_cap(g, limits.th_cap, "oracle_th");
    int best = g.n() + 1;  // th(G,V) = n, so this is a strict upper bound
    std::uint64_t witness = g.vertex_mask();
    for (int k = 0; k <= g.n(); ++k) {
        if (k >= best) break;
        for_each_subset(g.n(), k, [&](std::uint64_t c) {
            if (auto pt = propagation_time(g, c)) {
                if (k + *pt < best) {
                    best = k + *pt;
                    witness = c;
                }
            }
            return true;
        });
    }
    return {best, witness};
}

FortCollection oracle_minimal_forts(const Graph& g, const OracleLimits& limits) {
    check_cap(g, limits.z_cap, "oracle_minimal_forts");
    FortCollection out;
    out.all_minimal = true;
    for (int k = 1; k <= g.n(); ++k) {
        for_each_subset(g.n(), k, [&](std::uint64_t f) {
            for (std::uint64_t m : out.forts)
                if ((m & f) == m) return true;  // contains a smaller minimal fort
            if (is_fort(g, f)) out.forts.push_back(f);
            return true;
        });
    }
    return out;
}

namespace {

void pack_search(const std::vector<std::uint64_t>& forts, size_t i, std::uint64_t used, int count,
                 std::vector<std::uint64_t>& current, int& best, std::vector<std::uint64_t>& best_pack) {
    if (count > best) {
        best = count;
        best_pack = current;
    }
    if (i >= forts.size()) return;
    if (count + static_cast<int>(forts.size() - i) <= best) return;
    if (!(forts[i] & used)) {
        current.push_back(forts[i]);
        pack_search(forts, i + 1, used | forts[i], count + 1, current, best, best_pack);
        current.pop_back();
    }
    pack_search(forts, i + 1, used, count, current, best, best_pack);
}

}  // namespace

FtWitness oracle_ft(const Graph& g, const OracleLimits& limits) {
    FortCollection forts = oracle_minimal_forts(g, limits);
    int best = -1;
    std::vector<std::uint64_t> current, best_pack;
    pack_search(forts.forts, 0, 0, 0, current, best, best_pack);
    return {best, best_pack};
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t vertices_to_mask(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= 1ULL << v;
    return m;
}

}  // namespace zf
