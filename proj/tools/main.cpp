// Command-line driver: single runs, plan-driven experiment batches, and the
// registry listing. All heavy lifting lives in the library headers so the
// same code paths are exercised by the test suites.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgsr/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Great Salmon Run optimizer and benchmark harness"};
    app.require_subcommand(1);

    tgsr::RunCommand run_cmd;
    CLI::App* run = app.add_subcommand("run", "run one seeded optimization");
    run->add_option("--algo", run_cmd.algorithm,
                    "algorithm: tgsr, pso, dea, random")
        ->default_val(run_cmd.algorithm);
    run->add_option("--fn", run_cmd.benchmark, "benchmark function name")
        ->default_val(run_cmd.benchmark);
    run->add_option("--dim", run_cmd.dimension, "problem dimension")
        ->default_val(run_cmd.dimension);
    run->add_option("--seed", run_cmd.seed, "run seed (base seed with --runs)")
        ->default_val(run_cmd.seed);
    run->add_option("--runs", run_cmd.runs,
                    "number of seeded runs; above 1 also prints batch "
                    "statistics")
        ->default_val(run_cmd.runs);
    run->add_option("--jobs", run_cmd.jobs, "worker threads for --runs batches")
        ->default_val(run_cmd.jobs);
    run->add_option("--set", run_cmd.set_args,
                    "parameter override, key=value (repeatable)");
    run->add_option("--out", run_cmd.out_path,
                    "write the run record (trace, final best) as JSON");
    run->add_option("--budget", run_cmd.budget,
                    "budget mode: paper (configured iterations) or equal "
                    "(fixed evaluation budget)")
        ->check(CLI::IsMember({"paper", "equal"}))
        ->default_val(run_cmd.budget);
    run->add_option("--evals", run_cmd.evaluation_budget,
                    "evaluation budget used with --budget equal")
        ->default_val(run_cmd.evaluation_budget);

    tgsr::ExperimentCommand exp_cmd;
    CLI::App* experiment = app.add_subcommand(
        "experiment", "run a plan file and write summary, traces, and grid");
    experiment->add_option("plan", exp_cmd.plan_path, "plan file (JSON)")
        ->required();
    experiment->add_option("--out", exp_cmd.out_dir,
                           "output directory (default: plan output.dir, then "
                           "$TGSR_OUT_DIR, then ./results)");
    experiment->add_option("--format", exp_cmd.format,
                           "output format override: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    experiment->add_option("--jobs", exp_cmd.jobs,
                           "worker threads for runs within an experiment")
        ->default_val(exp_cmd.jobs);

    CLI::App* list =
        app.add_subcommand("list", "list algorithms, defaults, and benchmarks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (run->parsed()) return tgsr::cmd_run(run_cmd, std::cout, std::cerr);
    if (experiment->parsed())
        return tgsr::cmd_experiment(exp_cmd, std::cout, std::cerr);
    if (list->parsed()) return tgsr::cmd_list(std::cout);
    return 1;
}
