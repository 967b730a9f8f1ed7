#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "zf/graph.hpp"
#include "zf/model.hpp"
#include "zf/sim.hpp"
#include "zf/solver.hpp"

namespace zf::models {

enum class Variant { Z, Pt, PT, Th };
const char* to_string(Variant v);

// Short stable tag used in model names and export filenames.
std::string graph_tag(const Graph& g);

// --- Infection model -------------------------------------------------------
//
// Variables, in index order: s_v (binary, v < n), x_v (integer in [0,T]),
// y_a (binary, arcs in lex order), z (integer in [0,T]). Constraints:
//   (1) s_v + sum_{(u,v) in A} y_uv = 1                       per vertex
//   (2) x_u - x_v + (T+1) y_uv <= T                           per arc
//   (3) x_w - x_v + (T+1) y_uv <= T                           per arc, w in N(u)\{v}
//   (4) x_v - z <= 0                                          per vertex
// Objectives: Z: sum s_v; Pt: sum s_v + z/(2T); Th: sum s_v + z.
// The PT variant is rejected: feasible solutions may idle between forces, so
// the model cannot see the synchronous maximum.
struct ImLayout {
    int n, T, narcs;
    int s(int v) const { return v; }
    int x(int v) const { return n + v; }
    int y(int a) const { return 2 * n + a; }
    int z() const { return 2 * n + narcs; }
    int count() const { return 2 * n + narcs + 1; }
};
ImLayout im_layout(const Graph& g, int T);
milp::LinearModel build_im(const Graph& g, int T, Variant variant);

// --- Time step model -------------------------------------------------------
//
// Variables, in index order: x_v^0 (binary), x_v^t (binary, t = 1..T),
// y_a^t (binary, t-major then arc lex), z^t (binary). Constraints:
//   (1) x_v^0 + sum_t sum_{(u,v)} y_uv^t = 1                  per vertex
//   (2) y_uv^t - x_u^{t-1} <= 0                               per arc, t
//   (3) y_uv^t - x_w^{t-1} <= 0                               per arc, w in N(u)\{v}, t
//   (4) x_v^t - x_v^{t-1} - sum_{(u,v)} y_uv^t = 0            per vertex, t
//   (5) x_u^{t-1} - x_v^{t-1} + sum_{w in N(u)\{v}} x_w^{t-1}
//         - sum_{(w,v) in A} y_wv^t <= deg(u) - 1             per arc, t
//   (6) (1/n) sum_v (x_v^t - x_v^{t-1}) - z^t <= 0            per t
//   (7) z^t - sum_v (x_v^t - x_v^{t-1}) <= 0                  per t
// Objectives: Z: sum x^0; Pt: + (1/2T) sum z^t; PT: - (1/2T) sum z^t;
// Th: + sum z^t.
struct TsmLayout {
    int n, T, narcs;
    int x(int v, int t) const { return t == 0 ? v : n + (t - 1) * n + v; }
    int y(int a, int t) const { return n * (T + 1) + (t - 1) * narcs + a; }
    int z(int t) const { return n * (T + 1) + narcs * T + (t - 1); }
    int count() const { return n * (T + 1) + narcs * T + T; }
};
TsmLayout tsm_layout(const Graph& g, int T);
milp::LinearModel build_tsm(const Graph& g, int T, Variant variant);

// TSM with the Pt objective plus the extra constraint sum_t z^t >= k.
milp::LinearModel build_tsm_pti(const Graph& g, int T, int k);

// --- Fort cover model ------------------------------------------------------
// min sum s_v s.t. sum_{v in F} s_v >= 1 per supplied fort; binaries, or
// [0,1] when relaxed. Every supplied set must pass the fort predicate.
milp::LinearModel build_fort_cover(const Graph& g, const FortCollection& forts, bool relaxed);

// --- Minimum fort / separation models --------------------------------------
// Fort region (shared by MF, LMF, MFF, and each FN copy):
//   sum_v x_v >= 1, and per vertex v and neighbor u of v:
//   x_u - x_v + sum_{w in N(u)\{v}} x_w >= 0.
struct MinFortOptions {
    // Fix x to zero on cl(C) instead of C (A/B alternative; the default
    // follows the cheaper fixing that skips the closure computation).
    bool fix_closure = false;
};
milp::LinearModel build_min_fort(const Graph& g, std::uint64_t c, MinFortOptions opts = {});

// min sum_v weight_v x_v over the fort region; weights in [0,1]. A violated
// fort exists iff the optimum is < 1.
milp::LinearModel build_frac_min_fort(const Graph& g, const std::vector<Rat>& weights);

// Fort region plus sum_{v in F} x_v <= |F| - 1 per excluded (minimal) fort.
milp::LinearModel build_minimal_fort_excl(const Graph& g, const FortCollection& excl);

// --- Fort number model -----------------------------------------------------
// Variables: z_i (binary, copies i = 1..n first), x_{iv} (binary, copy-major).
//   z_i - sum_u x_iu <= 0; fort region rows per copy; sum_i x_iu <= 1 per u;
//   maximize sum z_i.
struct FnLayout {
    int n;
    int z(int i) const { return i; }              // copy i in 0..n-1
    int x(int i, int v) const { return n + i * n + v; }
    int count() const { return n * n + n; }
};
FnLayout fn_layout(const Graph& g);
struct FnOptions {
    // Optional z_i >= z_{i+1} rows; off by default (printed model), safe to
    // enable since copies are interchangeable.
    bool symmetry_breaking = false;
};
milp::LinearModel build_fort_number(const Graph& g, FnOptions opts = {});

// --- Extraction (always validated against the simulator) -------------------
enum class ZfModelKind { IM, TSM, FC };

std::uint64_t extract_zfs(const Graph& g, const milp::Solution& sol, ZfModelKind kind);
ForcingTrace extract_trace(const Graph& g, const milp::Solution& sol, ZfModelKind kind, int T);
std::uint64_t extract_fort(const Graph& g, const milp::Solution& sol);
FortCollection extract_packing(const Graph& g, const milp::Solution& sol);

// --- Solver hints -----------------------------------------------------------
// Node hooks that prune by closure reasoning and resolve leaves from the
// synchronous game; see solver.hpp for the contract. `pti_k` adds the
// sum z^t >= k requirement to the leaf test.
milp::SolveHints im_hints(const Graph& g, int T, Variant variant);
milp::SolveHints tsm_hints(const Graph& g, int T, Variant variant, std::optional<int> pti_k = {});
milp::SolveHints fort_model_hints(const Graph& g);
milp::SolveHints fn_hints(const Graph& g);

int default_horizon(const Graph& g);

}  // namespace zf::models
