#include "twocst/convert.hpp"
#include "twocst/dot.hpp"
#include "twocst/entropy.hpp"
#include "twocst/errors.hpp"
#include "twocst/expectation.hpp"
#include "twocst/gen.hpp"
#include "twocst/io.hpp"
#include "twocst/optimal.hpp"
#include "twocst/search.hpp"
#include "twocst/validate.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace twocst;

TreeKind parse_kind(const std::string& s) {
    if (s == "loc")
        return TreeKind::Loc;
    if (s == "nil")
        return TreeKind::Nil;
    return TreeKind::SuccessfulOnly;
}

struct ExperimentConfig {
    int n_min = 1;
    int n_max = 6;
    int trials = 100;
    std::uint64_t seed = 1;
};

int cmd_solve(const std::string& kind, const std::string& input,
              const std::string& emit_tree, int max_n) {
    const Instance instance = parse_instance(read_file(input));
    SolverOptions options;
    options.max_n = max_n;
    const SolveResult r = optimal(instance, parse_kind(kind), options);
    std::cout << format_rational(r.cost) << "\n";
    if (!emit_tree.empty())
        write_file(emit_tree, serialize_tree(r.tree) + "\n");
    return 0;
}

int cmd_convert(const std::string& tree_file, const std::string& input,
                const std::string& mode, std::uint64_t seed,
                const std::string& emit_trace, const std::string& emit_tree,
                int max_branches) {
    const Instance instance = parse_instance(read_file(input));
    const Tree tree = parse_tree(read_file(tree_file));
    {
        const ValidationReport v = validate(tree, instance, TreeKind::Nil);
        if (!v.correct)
            throw InvalidTreeError(
                "input tree is not a correct bottom-leaf tree: " +
                (v.violations.empty() ? std::string("unknown") : v.violations.front()));
        if (v.redundant())
            throw InvalidTreeError("input tree has redundant nodes");
    }
    const Rat input_cost = cost(tree, instance, TreeKind::Nil);
    const Rat bound = input_cost + 1;
    std::cout << "input cost: " << format_rational(input_cost) << "\n";
    std::cout << "bound: " << format_rational(bound) << "\n";

    if (mode == "exact") {
        if (!emit_trace.empty() || !emit_tree.empty()) {
            std::cerr << "error: exact mode averages all executions; there is no "
                         "single tree or trace to emit\n";
            return 1;
        }
        ExpectationOptions options;
        options.max_branch_points = max_branches;
        const ExpectationResult r = exact_expected_cost(tree, instance, options);
        std::cout << "expected cost: " << format_rational(r.expected_cost) << "\n";
        std::cout << "executions: " << r.executions << "\n";
        std::cout << "bound check: " << (r.expected_cost <= bound ? "PASS" : "FAIL")
                  << "\n";
        return 0;
    }

    Tree out{nullptr};
    ConversionTrace trace;
    if (mode == "seeded") {
        RandomCoins coins(seed);
        ProcessResult r = process(tree, instance, coins);
        out = std::move(r.tree);
        trace = std::move(r.trace);
        std::cout << "result cost: "
                  << format_rational(cost(out, instance, TreeKind::Loc)) << "\n";
    } else {
        ExpectationOptions options;
        options.max_branch_points = max_branches;
        BestConversion r = best_conversion(tree, instance, options);
        out = std::move(r.tree);
        trace = std::move(r.trace);
        std::cout << "result cost: " << format_rational(r.cost) << "\n";
    }
    const Rat result_cost = cost(out, instance, TreeKind::Loc);
    std::cout << "bound check: " << (result_cost <= bound ? "PASS" : "FAIL") << "\n";
    if (!emit_tree.empty())
        write_file(emit_tree, serialize_tree(out) + "\n");
    if (!emit_trace.empty())
        write_file(emit_trace, serialize_trace(trace) + "\n");
    return 0;
}

int cmd_gap(const ExperimentConfig& config) {
    std::cout << "trial n opt_nil opt_loc gap converted\n";
    std::optional<Rat> max_gap;
    std::string complaint;
    const int span = config.n_max - config.n_min + 1;
    for (int t = 0; t < config.trials; ++t) {
        const int n = config.n_min + t % span;
        const Instance instance =
            random_instance(n, config.seed + static_cast<std::uint64_t>(t));
        const SolveResult opt_nil = optimal(instance, TreeKind::Nil);
        const SolveResult opt_loc = optimal(instance, TreeKind::Loc);
        const Rat gap = opt_loc.cost - opt_nil.cost;
        ExpectationOptions options;
        options.max_branch_points = 1 << 14;
        const ExpectationResult conv =
            exact_expected_cost(opt_nil.tree, instance, options);
        std::cout << t << " " << n << " " << format_rational(opt_nil.cost) << " "
                  << format_rational(opt_loc.cost) << " " << format_rational(gap)
                  << " " << format_rational(conv.expected_cost) << "\n";
        if (!max_gap || gap > *max_gap)
            max_gap = gap;
        if (complaint.empty() && gap > 1)
            complaint = "trial " + std::to_string(t) + ": located/bottom-leaf gap exceeds 1";
        if (complaint.empty() && conv.expected_cost > opt_nil.cost + 1)
            complaint = "trial " + std::to_string(t) +
                        ": expected conversion cost exceeds input cost + 1";
    }
    std::cout << "max gap: " << (max_gap ? format_rational(*max_gap) : "none") << "\n";
    if (!complaint.empty()) {
        std::cerr << "bound violation: " << complaint << "\n";
        return 5;
    }
    return 0;
}

int cmd_entropy(const std::string& input) {
    const Instance instance = parse_instance(read_file(input));
    const double tolerance = 1e-9;
    const double h_atoms = shannon_entropy(Distribution::create(instance.atom_weights()));
    const double direct = nil_direct_bound(instance);
    const double minus_one = loc_bound_minus_one(instance);
    std::cout << std::fixed << std::setprecision(6);
    std::cout << "H(alpha,beta): " << h_atoms << "\n";
    std::cout << "nil direct bound: " << direct << "\n";
    std::cout << "loc bound minus one: " << minus_one << "\n";
    if (instance.n() > 10) {
        std::cout << "opt costs: skipped (n > 10)\n";
        return 0;
    }
    const SolveResult opt_nil = optimal(instance, TreeKind::Nil);
    const SolveResult opt_loc = optimal(instance, TreeKind::Loc);
    std::cout << "opt_nil: " << format_rational(opt_nil.cost) << " ("
              << to_double(opt_nil.cost) << ")\n";
    std::cout << "opt_loc: " << format_rational(opt_loc.cost) << " ("
              << to_double(opt_loc.cost) << ")\n";
    const bool ok = to_double(opt_loc.cost) >= h_atoms - tolerance &&
                    to_double(opt_nil.cost) >= direct - tolerance &&
                    to_double(opt_nil.cost) >= minus_one - tolerance;
    std::cout << "ordering: " << (ok ? "PASS" : "FAIL") << "\n";
    return 0;
}

int cmd_dot(const std::string& tree_file) {
    std::cout << to_dot(parse_tree(read_file(tree_file)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers and conversions for two-way comparison search trees"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "optimal tree for an instance");
    std::string solve_kind, solve_input, solve_emit_tree;
    int solve_max_n = 10;
    solve->add_option("--kind", solve_kind, "tree model")
        ->required()
        ->check(CLI::IsMember({"loc", "nil", "succ"}));
    solve->add_option("--input", solve_input, "instance JSON file")->required();
    solve->add_option("--emit-tree", solve_emit_tree, "write the optimal tree here");
    solve->add_option("--max-n", solve_max_n, "solver size limit");

    auto* convert = app.add_subcommand("convert", "equality elimination on a tree");
    std::string conv_tree, conv_input, conv_mode;
    std::uint64_t conv_seed = 0;
    std::string conv_emit_trace, conv_emit_tree;
    int conv_max_branches = 20;
    convert->add_option("--tree", conv_tree, "bottom-leaf tree JSON file")->required();
    convert->add_option("--input", conv_input, "instance JSON file")->required();
    convert->add_option("--mode", conv_mode, "seeded, exact, or best")
        ->required()
        ->check(CLI::IsMember({"seeded", "exact", "best"}));
    convert->add_option("--seed", conv_seed, "coin seed for seeded mode");
    convert->add_option("--emit-trace", conv_emit_trace, "write the step trace here");
    convert->add_option("--emit-tree", conv_emit_tree, "write the located tree here");
    convert->add_option("--max-branches", conv_max_branches,
                        "coin fork budget for exact and best modes");

    auto* gap = app.add_subcommand("gap", "random sweep of both optima and the conversion");
    ExperimentConfig config;
    gap->add_option("--n-min", config.n_min)->check(CLI::NonNegativeNumber);
    gap->add_option("--n-max", config.n_max)->check(CLI::NonNegativeNumber);
    gap->add_option("--trials", config.trials)->check(CLI::NonNegativeNumber);
    gap->add_option("--seed", config.seed);

    auto* entropy = app.add_subcommand("entropy", "entropy bounds for an instance");
    std::string entropy_input;
    entropy->add_option("--input", entropy_input, "instance JSON file")->required();

    auto* dot = app.add_subcommand("dot", "Graphviz DOT for a tree");
    std::string dot_tree;
    dot->add_option("--tree", dot_tree, "tree JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(solve_kind, solve_input, solve_emit_tree, solve_max_n);
        if (convert->parsed())
            return cmd_convert(conv_tree, conv_input, conv_mode, conv_seed,
                               conv_emit_trace, conv_emit_tree, conv_max_branches);
        if (gap->parsed()) {
            if (config.n_max < config.n_min) {
                std::cerr << "error: --n-max must be at least --n-min\n";
                return 1;
            }
            return cmd_gap(config);
        }
        if (entropy->parsed())
            return cmd_entropy(entropy_input);
        if (dot->parsed())
            return cmd_dot(dot_tree);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const SolverLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidTreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BranchLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
