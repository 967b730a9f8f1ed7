#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Vertex subsets are 64-bit masks (bit v = vertex v), matching Graph.

struct Force {
    int forcer;
    int forced;
    bool operator==(const Force&) const = default;
};

// Record of one synchronous zero forcing game: initial gray set, the forces
// applied at each time step (no empty steps), and for each vertex the step at
// which it became gray (0 = initial, -1 = never).
struct ForcingTrace {
    std::uint64_t initial = 0;
    std::vector<std::vector<Force>> steps;
    std::vector<int> filled_at;

    std::uint64_t filled() const;
    int step_count() const { return static_cast<int>(steps.size()); }
};

// Runs the standard color change rule synchronously: at each step every white
// vertex that is the unique white neighbor of some gray vertex is forced, the
// recorded forcer being the smallest-index eligible gray neighbor. Stops at
// the closure cl(C).
ForcingTrace closure(const Graph& g, std::uint64_t c);

bool is_zfs(const Graph& g, std::uint64_t c);

// Number of synchronous steps to fill V, nullopt when c is not a zero forcing
// set. pt = 0 when c already covers V.
std::optional<int> propagation_time(const Graph& g, std::uint64_t c);

// f is a fort iff f is nonempty and no vertex outside f has exactly one
// neighbor in f.
bool is_fort(const Graph& g, std::uint64_t f);

// Whether some fort of g lies inside `within` (equivalently, the complement of
// `within` is not a zero forcing set).
bool contains_fort(const Graph& g, std::uint64_t within);

// Minimum-cardinality fort contained in `within` (cardinality-then-lex first),
// nullopt if none. Such a fort is always an inclusion-minimal fort of g.
std::optional<std::uint64_t> minimum_fort_within(const Graph& g, std::uint64_t within);

// Structural replay check used to validate traces extracted from IP solutions.
bool is_valid_trace(const Graph& g, const ForcingTrace& trace);

struct FortCollection {
    std::vector<std::uint64_t> forts;
    bool all_minimal = false;

    int size() const { return static_cast<int>(forts.size()); }
};

// Enumeration caps for the exhaustive oracles (2^n scans).
struct OracleLimits {
    int z_cap = 16;
    int th_cap = 12;
};

struct ZWitness {
    int value;
    std::uint64_t witness;
};

struct PtSummary {
    int zero_forcing_number;
    int pt;
    int PT;
    std::vector<int> realized;
};

struct FtWitness {
    int value;
    std::vector<std::uint64_t> packing;
};

// Exact values by cardinality-then-lexicographic subset enumeration; the
// witness is always the first optimum in that order. Throw when the order
// exceeds the cap.
ZWitness oracle_Z(const Graph& g, const OracleLimits& limits = {});
PtSummary oracle_pt_PT(const Graph& g, const OracleLimits& limits = {});
ZWitness oracle_th(const Graph& g, const OracleLimits& limits = {});
FortCollection oracle_minimal_forts(const Graph& g, const OracleLimits& limits = {});
FtWitness oracle_ft(const Graph& g, const OracleLimits& limits = {});

// Visits all k-subsets of {0..n-1} in lexicographic order (as sorted vertex
// lists); stops early when fn returns false.
void for_each_subset(int n, int k, const std::function<bool(std::uint64_t)>& fn);

std::vector<int> mask_to_vertices(std::uint64_t mask);
std::uint64_t vertices_to_mask(const std::vector<int>& vs);

}  // namespace zf
