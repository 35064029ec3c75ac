#pragma once

#include <charconv>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tgsr/benchmarks.hpp"
#include "tgsr/experiment.hpp"
#include "tgsr/format.hpp"
#include "tgsr/plan.hpp"
#include "tgsr/registry.hpp"
#include "tgsr/report.hpp"
#include "tgsr/results_io.hpp"

namespace tgsr {

/// Environment variable consulted for the default output directory when
/// neither --out nor the plan file names one.
inline constexpr const char* kOutputDirEnvVar = "TGSR_OUT_DIR";

/// Parses "--set key=value" arguments. Values are numbers, or true/false
/// for the boolean switches.
inline ParamOverrides parse_set_args(const std::vector<std::string>& args) {
    ParamOverrides overrides;
    for (const std::string& arg : args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("--set expects key=value, got \"" + arg +
                                        "\"");
        }
        const std::string key = arg.substr(0, eq);
        const std::string value = arg.substr(eq + 1);
        if (value == "true") {
            overrides[key] = 1.0;
        } else if (value == "false") {
            overrides[key] = 0.0;
        } else {
            double parsed = 0.0;
            const char* begin = value.data();
            const char* end = begin + value.size();
            const auto [ptr, ec] = std::from_chars(begin, end, parsed);
            if (ec != std::errc{} || ptr != end) {
                throw std::invalid_argument("--set " + key +
                                            ": not a number: \"" + value + "\"");
            }
            overrides[key] = parsed;
        }
    }
    return overrides;
}

struct RunCommand {
    std::string algorithm = "tgsr";
    std::string benchmark = "sphere";
    std::size_t dimension = 30;
    std::uint64_t seed = 1;
    std::size_t runs = 1;  ///< > 1 runs a seeded batch (seeds seed..seed+runs-1)
    std::size_t jobs = 1;
    std::vector<std::string> set_args;
    std::string out_path;          ///< optional: write the record(s) as JSON
    std::string budget = "paper";  ///< paper | equal
    std::uint64_t evaluation_budget = 40000;
};

/// Seeded optimization from the command line. One run prints its final best
/// fitness and evaluation count; --runs N > 1 runs a batch and adds the
/// aggregate quality / robustness / success statistics.
inline int cmd_run(const RunCommand& cmd, std::ostream& out,
                   std::ostream& err) {
    try {
        ExperimentPlan plan;
        plan.algorithm = cmd.algorithm;
        plan.params = parse_set_args(cmd.set_args);
        plan.benchmark = cmd.benchmark;
        plan.dimension = cmd.dimension;
        plan.runs = cmd.runs;
        plan.base_seed = cmd.seed;
        plan.budget_mode = budget_mode_from_name(cmd.budget);
        plan.evaluation_budget = cmd.evaluation_budget;
        const ExperimentResult result = run_experiment(plan, cmd.jobs);

        out << "algorithm:   " << cmd.algorithm << "\n"
            << "benchmark:   " << cmd.benchmark << " (dimension "
            << cmd.dimension << ")\n";
        if (cmd.runs == 1) {
            const RunRecord& record = result.records.front();
            out << "seed:        " << cmd.seed << "\n"
                << "iterations:  " << record.trace.size() << "\n"
                << "evaluations: " << record.evaluations << "\n"
                << "final best:  " << format_double(record.final_best.fitness)
                << "\n";
            if (!cmd.out_path.empty()) {
                write_text_file(cmd.out_path,
                                record_to_json(record).dump(2) + "\n");
                out << "record:      " << cmd.out_path << "\n";
            }
        } else {
            out << "runs:        " << cmd.runs << " (seeds " << cmd.seed
                << ".." << (cmd.seed + cmd.runs - 1) << ")\n";
            for (const RunRecord& record : result.records) {
                out << "  seed " << record.seed << ": final best "
                    << format_double(record.final_best.fitness) << " ("
                    << record.evaluations << " evaluations)\n";
            }
            out << "quality:     " << format_double(result.stats.quality)
                << "\n"
                << "robustness:  " << format_double(result.stats.robustness)
                << "\n"
                << "success:     "
                << detail::success_percent(result.stats.success_rate)
                << " (threshold " << format_double(result.success_threshold)
                << ")\n";
            if (!cmd.out_path.empty()) {
                write_text_file(cmd.out_path,
                                result_to_json(result).dump(2) + "\n");
                out << "records:     " << cmd.out_path << "\n";
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

struct ExperimentCommand {
    std::string plan_path;
    std::string out_dir;  ///< overrides the plan's output.dir
    std::string format;   ///< overrides the plan's output.format: csv | json
    std::size_t jobs = 1;
};

/// Runs every experiment in the plan, persists results, and prints the
/// comparison grid when the plan forms a complete algorithms x benchmarks
/// grid. Nothing is written unless every run succeeded.
inline int cmd_experiment(const ExperimentCommand& cmd, std::ostream& out,
                          std::ostream& err) {
    try {
        const PlanFile plan = parse_plan_file(cmd.plan_path);

        std::string out_dir = !cmd.out_dir.empty() ? cmd.out_dir
                                                   : plan.output_dir;
        if (out_dir.empty()) {
            if (const char* env = std::getenv(kOutputDirEnvVar)) out_dir = env;
        }
        if (out_dir.empty()) out_dir = "results";
        const ResultFormat format = !cmd.format.empty()
                                        ? result_format_from_name(cmd.format)
                                        : plan.format;

        std::vector<ExperimentResult> results;
        results.reserve(plan.experiments.size());
        for (const ExperimentPlan& experiment : plan.experiments) {
            results.push_back(run_experiment(experiment, cmd.jobs));
        }

        auto written = write_results(results, out_dir, format);
        if (results.empty()) {
            out << "plan has no experiments; wrote header-only summary\n";
        } else {
            for (const ExperimentResult& r : results) {
                out << r.plan.algorithm << " on " << r.plan.benchmark
                    << " (dimension " << r.plan.dimension << ", "
                    << r.plan.runs << " runs): quality "
                    << format_double(r.stats.quality) << ", robustness "
                    << format_double(r.stats.robustness) << ", success "
                    << detail::success_percent(r.stats.success_rate) << "\n";
            }
            try {
                const ComparisonTable table = build_comparison(results);
                out << "\n" << render_text(table);
                const auto grid_path =
                    std::filesystem::path(out_dir) / "comparison.csv";
                write_text_file(grid_path, render_csv(table));
                written.push_back(grid_path);
            } catch (const std::invalid_argument&) {
                out << "\n(comparison grid skipped: experiments do not form a "
                       "complete algorithms x benchmarks grid)\n";
            }
        }
        out << "\nwrote " << written.size() << " file(s) under " << out_dir
            << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

/// Prints the algorithm registry with default parameters, and the benchmark
/// suite.
inline int cmd_list(std::ostream& out) {
    out << "algorithms:\n";
    for (const AlgorithmInfo& info : algorithm_catalog()) {
        out << "  " << info.name << "  (" << info.summary << ")\n";
        out << "    defaults:";
        for (const auto& [key, value] : info.defaults) {
            out << " " << key << "=" << value;
        }
        out << "\n";
    }
    out << "benchmarks (any dimension, defaults shown at 30):\n";
    for (const std::string& name : benchmark_names()) {
        const ObjectiveFn fn = make_benchmark(name, 30);
        out << "  " << name << "  bounds [" << format_double(fn.space.lower(0))
            << ", " << format_double(fn.space.upper(0)) << "]^n, optimum "
            << format_double(fn.known_optimum) << "\n";
    }
    return 0;
}

}  // namespace tgsr
