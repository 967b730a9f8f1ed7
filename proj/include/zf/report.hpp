#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zf/drivers.hpp"
#include "zf/graph.hpp"

namespace zf::report {

enum class Format { Csv, Markdown };
Format format_from_name(const std::string& name);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out, Format format) const;
};

// Parameter values print exactly: integers plainly, non-integral rationals as
// "p/q"; decimal companions are separate columns rendered to 6 places.
std::string cell(const Rat& value);
std::string cell_decimal(const Rat& value);
// 1-indexed vertex set, matching the paper's figure labels.
std::string cell_vertices(std::uint64_t mask);

// Labeled input graphs: label is the graph6 line for files, a family/spec
// string otherwise.
struct LabeledGraph {
    std::string label;
    Graph graph;
};

std::vector<LabeledGraph> load_family_spec(const std::string& spec);
std::vector<LabeledGraph> load_random_spec(const std::string& spec);
std::vector<LabeledGraph> load_graph6_input(const std::string& path);

// Ordered parallel map over graphs; worker count 1 keeps everything on the
// calling thread.
void parallel_for(int n_items, int workers, const std::function<void(int)>& fn);

struct RunOptions {
    std::vector<std::string> params;            // Z pt PT th Zstar ft
    std::vector<drivers::Method> methods;       // value models to run
    std::optional<int> T;
    drivers::SolverConfig solver;
    int workers = 1;
    int oracle_cap = 16;
    Format format = Format::Csv;
};

struct CommandResult {
    Table table;
    bool ok = true;          // all agreement/conjecture flags passed
    bool budget_hit = false;
    std::vector<std::string> jsonl;  // per-run structured log lines
};

CommandResult cmd_params(const std::vector<LabeledGraph>& inputs, const RunOptions& opts);
CommandResult cmd_pti(const std::vector<LabeledGraph>& inputs, const RunOptions& opts);
CommandResult cmd_forts(const std::vector<LabeledGraph>& inputs, const RunOptions& opts, bool list);
CommandResult cmd_ft(const std::vector<LabeledGraph>& inputs, const RunOptions& opts);
CommandResult cmd_zstar(const std::vector<LabeledGraph>& inputs, const RunOptions& opts);

// Table-6-shaped study over a directory of per-order tree corpora
// (trees05.g6, trees06.g6, ...).
CommandResult cmd_tree_study(const std::string& corpus_dir, int n_lo, int n_hi,
                             const RunOptions& opts);

// With fixtures: per-graph rows plus seeded vertex/edge-sum pairs using the
// supplied rank table. Without fixtures: the order <= 7 degraded mode (M = Z),
// sweeping a corpus directory and seeded sums of small connected graphs.
struct NullityOptions {
    std::string e_fixtures;   // graph6 file; empty selects degraded mode
    std::string rank_table;   // required with fixtures
    std::string corpus_dir;   // degraded mode source
    std::uint64_t seed = 1;
};
CommandResult cmd_nullity_sums(const NullityOptions& nopts, const RunOptions& opts);

struct ExportOptions {
    std::string output_dir;
    std::vector<std::string> kinds;  // im tsm fc
    std::optional<int> T;
    std::string external_solver;     // optional "cmd" run as: cmd model.mps model.sol
};
CommandResult cmd_export(const std::vector<LabeledGraph>& inputs, const ExportOptions& eopts,
                         const RunOptions& opts);

}  // namespace zf::report
