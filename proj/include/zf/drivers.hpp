#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zf/graph.hpp"
#include "zf/models.hpp"
#include "zf/sim.hpp"
#include "zf/solver.hpp"

namespace zf::drivers {

using models::Variant;

struct SolverConfig {
    milp::Budget budget;
    // Closure-based node pruning / leaf resolution hooks; the model and its
    // optimum are identical either way, only the search differs.
    bool hints = true;
    // Legal FN speedup (copies are interchangeable); the printed model stays
    // the builder default.
    bool fn_symmetry_breaking = true;
    // Cut loop option: add every alternative optimal fort found at the root
    // instead of exactly one per iteration.
    bool add_all_root_forts = false;
};

enum class Method { IM, TSM, FC, Oracle };
Method method_from_name(const std::string& name);
const char* to_string(Method m);

struct CutLogEntry {
    int iteration;
    std::vector<int> added_fort;  // empty on the final (clean) iteration
    Rat relaxed_objective;
};

struct CutLoopState {
    std::vector<std::uint64_t> forts;
    std::vector<CutLogEntry> log;
    int iterations = 0;
};

// --- per-parameter pipelines -------------------------------------------------

struct ZOutcome {
    int value = -1;
    std::uint64_t witness = 0;
    bool exact = true;
    milp::Solution solution;  // default-initialized for Method::Oracle
};

struct TimedOutcome {
    int set_size = -1;
    int time = -1;  // pt / PT; throttling reports set_size + time
    std::uint64_t witness = 0;
    bool exact = true;
    milp::Solution solution;
};

ZOutcome zero_forcing_number(const Graph& g, Method method, std::optional<int> T = {},
                             const SolverConfig& cfg = {});
TimedOutcome propagation(const Graph& g, Method method, Variant which /* Pt or PT */,
                         std::optional<int> T = {}, const SolverConfig& cfg = {});
TimedOutcome throttling(const Graph& g, Method method, std::optional<int> T = {},
                        const SolverConfig& cfg = {});

// --- constraint generation ---------------------------------------------------

struct CutGenResult {
    int value = -1;
    std::uint64_t witness = 0;
    CutLoopState state;
    bool exact = true;
    milp::Solution last_master;
};
// Fort cover with integral master; separation adds one minimum violated fort
// per round (all root-optimal forts behind the config flag).
CutGenResult zf_via_cut_generation(const Graph& g, const SolverConfig& cfg = {});

struct FractionalResult {
    Rat value;
    std::vector<Rat> weights;
    CutLoopState state;
    bool exact = true;
    // exact certificate: the last separation optimum, >= 1
    Rat final_separation_value;
};
FractionalResult fractional_zf(const Graph& g, const SolverConfig& cfg = {});

// --- iterative procedures ----------------------------------------------------

struct PtiResult {
    std::vector<int> realized;
    bool complete = true;
};
PtiResult realized_pti(const Graph& g, std::optional<int> T_override = {},
                       const SolverConfig& cfg = {});

struct MinimalFortsResult {
    FortCollection forts;
    bool complete = true;
};
MinimalFortsResult all_minimal_forts(const Graph& g, const SolverConfig& cfg = {});

struct FortNumberResult {
    int value = -1;
    FortCollection packing;
    bool exact = true;
    milp::Solution solution;
};
FortNumberResult fort_number(const Graph& g, const SolverConfig& cfg = {});

// --- minimum rank of vertex/edge sums ---------------------------------------

struct ComponentRank {
    int mr;          // mr(G)
    int mr_minus_v;  // mr(G - v) at the merge vertex
    int spread() const { return mr - mr_minus_v; }
};

// mr of the graph formed by identifying one vertex from each component:
// sum mr(G_i - v_i) + min(sum r_{v_i}, 2).
int mr_vertex_sum(const std::vector<ComponentRank>& components);
// mr(G) + mr(G') when either rank spread at the join is 2, else + 1.
int mr_edge_sum(const ComponentRank& g, const ComponentRank& h);

// mr = n - Z, valid for order <= 7 where maximum nullity equals the zero
// forcing number.
int small_order_mr(const Graph& g);
ComponentRank small_order_rank(const Graph& g, int v);

struct RankEntry {
    int mr;
    std::vector<int> mr_minus;  // per vertex
};
// Text table: one line per graph, "<graph6> <mr> <mr(G-0)> ... <mr(G-n-1)>".
using RankTable = std::map<std::string, RankEntry>;
RankTable load_rank_table(const std::string& path);

struct BoundReport {
    int ft;
    Rat z_star;
    int z;
    std::optional<int> max_nullity;  // filled from rank data or the order<=7 identity
    bool chain_holds;                // ft <= Z* <= M (falls back to Z when M is absent)
};
BoundReport m_lower_bound_report(const Graph& g, std::optional<int> max_nullity = {},
                                 const SolverConfig& cfg = {});

}  // namespace zf::drivers
