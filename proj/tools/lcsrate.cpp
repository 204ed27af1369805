// lcsrate: optimal scores of random sequences, Monte Carlo estimates of the
// mean score per letter and confidence bounds for its limit.

#include <iostream>

#include <CLI11.hpp>

#include "lcsrate/cli.hpp"

int main(int argc, char** argv)
{
    using namespace lcsrate::cli;

    CLI::App app{"Random sequence comparison: scores, estimates and convergence bounds"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--scheme", cfg.scheme_path, "Scoring scheme file (default: binary LCS)");
        sub->add_option("--dist", cfg.dist_path, "Letter distribution file (default: uniform)");
        sub->add_option("--out", cfg.out_path, "Write output here instead of stdout");
    };
    auto add_bounds = [&](CLI::App* sub) {
        sub->add_option("--eps", cfg.epsilon, "Confidence parameter eps (level 1-eps)")->capture_default_str();
        sub->add_option("--c-mult", cfg.c_mult, "Multiplier c of the rate bound (default sqrt(A))");
        sub->add_option("--alexander-c", cfg.alexander_c, "Constant C of the Alexander bound")
            ->capture_default_str();
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Sequence length")->required();
        sub->add_option("--k", cfg.k, "Number of replicates")->required();
        sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
    };

    auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of the mean score per letter");
    add_inputs(estimate);
    add_sampling(estimate);
    estimate->add_option("--eps", cfg.epsilon, "Accepted for symmetry with confidence");

    auto* bound = app.add_subcommand("bound", "Evaluate the rate bounds and confidence radii");
    add_inputs(bound);
    add_bounds(bound);
    bound->add_option("--n", cfg.n, "Sequence length")->required();
    bound->add_option("--k", cfg.k, "Number of replicates (default 1)");

    auto* confidence = app.add_subcommand("confidence", "Confidence interval for the limit score");
    add_inputs(confidence);
    add_bounds(confidence);
    add_sampling(confidence);
    confidence->add_option("--mean", cfg.mean, "Use this mean score per letter instead of simulating");

    auto* sweep = app.add_subcommand("sweep", "Tabulate both rate bounds over an (n, A) grid as CSV");
    sweep->add_option("--scheme", cfg.scheme_path, "Take F from this scheme (default F=1)");
    sweep->add_option("--out", cfg.out_path, "CSV output path");
    sweep->add_option("--n-grid", cfg.n_grid, "start:stop:step or list")->capture_default_str();
    sweep->add_option("--a-grid", cfg.a_grid, "start:stop:step or list")->capture_default_str();
    sweep->add_option("--c-mult", cfg.c_mult, "Fixed multiplier c (default sqrt(A) per row)");
    sweep->add_option("--alexander-c", cfg.alexander_c, "Constant C of the Alexander bound")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the exhaustive and randomized self-checks");
    verify->add_option("--only", cfg.only, "Run one group: scoring, montecarlo, bounds, partition");
    verify->add_option("--out", cfg.out_path, "Report output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    return dispatch(cfg, std::cout, std::cerr);
}
