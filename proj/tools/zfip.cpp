#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zf/graph6.hpp"
#include "zf/report.hpp"

namespace {

using namespace zf;

struct CommonArgs {
    std::string input, family_spec, random_spec;
    std::vector<std::string> models{"im", "tsm", "fc"};
    int T = -1;
    double time_limit = 7200.0;
    long node_limit = -1;
    int workers = 1;
    std::string format = "csv";
    int oracle_cap = 16;
    std::string output;
    std::string log_path;
    bool no_hints = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_models = true) {
    cmd->add_option("--input", args.input, "graph6 file, one graph per line")->envname("ZFIP_INPUT");
    cmd->add_option("--family", args.family_spec, "family spec, e.g. cycle:5 or hypercube:2..4")
        ->envname("ZFIP_FAMILY");
    cmd->add_option("--random", args.random_spec, "random spec n,p,seed[,count]")
        ->envname("ZFIP_RANDOM");
    if (with_models)
        cmd->add_option("--models", args.models, "value models: im tsm fc oracle")
            ->envname("ZFIP_MODELS");
    cmd->add_option("--T", args.T, "time-step horizon override (default n-1)")->envname("ZFIP_T");
    cmd->add_option("--time-limit", args.time_limit, "per-solve wall clock budget in seconds")
        ->envname("ZFIP_TIME_LIMIT");
    cmd->add_option("--node-limit", args.node_limit, "branch-and-bound node cap")
        ->envname("ZFIP_NODE_LIMIT");
    cmd->add_option("--workers", args.workers, "parallel workers across graphs")
        ->envname("ZFIP_WORKERS");
    cmd->add_option("--format", args.format, "csv or markdown")->envname("ZFIP_FORMAT");
    cmd->add_option("--oracle-cap", args.oracle_cap, "max order for brute-force cross checks")
        ->envname("ZFIP_ORACLE_CAP");
    cmd->add_option("--output", args.output, "write the table here instead of stdout")
        ->envname("ZFIP_OUTPUT");
    cmd->add_option("--log", args.log_path, "JSON-lines run log path")->envname("ZFIP_LOG");
    cmd->add_flag("--no-hints", args.no_hints, "disable closure-based solver pruning");
}

std::vector<report::LabeledGraph> gather_inputs(const CommonArgs& args) {
    std::vector<report::LabeledGraph> inputs;
    if (!args.input.empty())
        for (auto& lg : report::load_graph6_input(args.input)) inputs.push_back(std::move(lg));
    if (!args.family_spec.empty())
        for (auto& lg : report::load_family_spec(args.family_spec)) inputs.push_back(std::move(lg));
    if (!args.random_spec.empty())
        for (auto& lg : report::load_random_spec(args.random_spec)) inputs.push_back(std::move(lg));
    if (inputs.empty()) throw CLI::ValidationError("provide --input, --family, or --random");
    return inputs;
}

report::RunOptions run_options(const CommonArgs& args) {
    report::RunOptions opts;
    opts.methods.clear();
    for (const auto& m : args.models) opts.methods.push_back(drivers::method_from_name(m));
    if (args.T >= 1) opts.T = args.T;
    opts.solver.budget.wall_seconds = args.time_limit;
    opts.solver.budget.max_nodes = args.node_limit;
    opts.solver.hints = !args.no_hints;
    opts.workers = args.workers;
    opts.oracle_cap = args.oracle_cap;
    opts.format = report::format_from_name(args.format);
    return opts;
}

int finish(const report::CommandResult& result, const CommonArgs& args,
           const report::RunOptions& opts) {
    if (!args.log_path.empty()) {
        std::ofstream log(args.log_path);
        for (const auto& line : result.jsonl) log << line << "\n";
    }
    if (args.output.empty()) {
        result.table.write(std::cout, opts.format);
    } else {
        std::ofstream out(args.output);
        if (!out) throw std::runtime_error("cannot write " + args.output);
        result.table.write(out, opts.format);
    }
    return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero forcing parameters via integer programming"};
    app.require_subcommand(1);

    CommonArgs args;
    std::vector<std::string> params{"Z"};
    bool list_forts = false;
    int tree_lo = 5, tree_hi = 10;
    std::string corpus_dir = "data/corpus";
    report::NullityOptions nopts;
    report::ExportOptions eopts;

    auto* params_cmd = app.add_subcommand("params", "parameter table over input graphs");
    add_common(params_cmd, args);
    params_cmd->add_option("--params", params, "any of: Z pt PT th Zstar ft");

    auto* pti_cmd = app.add_subcommand("pti", "realized propagation time intervals");
    add_common(pti_cmd, args, false);

    auto* forts_cmd = app.add_subcommand("forts", "all minimal forts per graph");
    add_common(forts_cmd, args, false);
    forts_cmd->add_flag("--list", list_forts, "list the forts, 1-indexed");

    auto* ft_cmd = app.add_subcommand("ft", "fort number per graph");
    add_common(ft_cmd, args, false);

    auto* zstar_cmd = app.add_subcommand("zstar", "fractional zero forcing number per graph");
    add_common(zstar_cmd, args, false);

    auto* tree_cmd = app.add_subcommand("tree-study", "minimal-fort maxima over tree corpora");
    add_common(tree_cmd, args, false);
    tree_cmd->add_option("--corpus-dir", corpus_dir, "directory with treesNN.g6 files");
    tree_cmd->add_option("--n-lo", tree_lo, "smallest order");
    tree_cmd->add_option("--n-hi", tree_hi, "largest order");

    auto* nullity_cmd = app.add_subcommand("nullity-sums", "maximum-nullity lower bound evidence");
    add_common(nullity_cmd, args, false);
    nullity_cmd->add_option("--e-fixtures", nopts.e_fixtures,
                            "graph6 fixtures for the order-8 exception graphs");
    nullity_cmd->add_option("--rank-table", nopts.rank_table,
                            "rank table: graph6 mr mr(G-0) ... per line");
    nullity_cmd->add_option("--corpus-dir", nopts.corpus_dir, "degraded-mode corpus directory")
        ->default_val("data/corpus");
    nullity_cmd->add_option("--seed", nopts.seed, "seed for the vertex/edge choices");

    auto* export_cmd = app.add_subcommand("export", "write MPS/LP files per (graph, model)");
    add_common(export_cmd, args, false);
    export_cmd->add_option("--kinds", eopts.kinds, "im tsm fc")->default_val(std::vector<std::string>{"im"});
    export_cmd->add_option("--output-dir", eopts.output_dir, "target directory")->required();
    export_cmd->add_option("--run-solver", eopts.external_solver,
                           "external solver command, run as: cmd model.mps model.sol");

    CLI11_PARSE(app, argc, argv);

    try {
        report::RunOptions opts = run_options(args);
        if (params_cmd->parsed()) {
            opts.params = params;
            return finish(report::cmd_params(gather_inputs(args), opts), args, opts);
        }
        if (pti_cmd->parsed())
            return finish(report::cmd_pti(gather_inputs(args), opts), args, opts);
        if (forts_cmd->parsed())
            return finish(report::cmd_forts(gather_inputs(args), opts, list_forts), args, opts);
        if (ft_cmd->parsed()) return finish(report::cmd_ft(gather_inputs(args), opts), args, opts);
        if (zstar_cmd->parsed())
            return finish(report::cmd_zstar(gather_inputs(args), opts), args, opts);
        if (tree_cmd->parsed())
            return finish(report::cmd_tree_study(corpus_dir, tree_lo, tree_hi, opts), args, opts);
        if (nullity_cmd->parsed())
            return finish(report::cmd_nullity_sums(nopts, opts), args, opts);
        if (export_cmd->parsed())
            return finish(report::cmd_export(gather_inputs(args), eopts, opts), args, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
