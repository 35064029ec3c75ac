#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tgsr/benchmarks.hpp"
#include "tgsr/registry.hpp"
#include "tgsr/statistics.hpp"

namespace tgsr {

/// paper: every algorithm runs its own configured iteration budget.
/// equal_evaluations: every algorithm gets the same total number of
/// objective evaluations, which makes cross-algorithm comparison fair when
/// the configured iteration budgets differ.
enum class BudgetMode { paper, equal_evaluations };

/// One batch of seeded runs of a single algorithm on a single benchmark.
/// Run k uses seed base_seed + k, so a batch is reproducible end to end and
/// runs can execute in any order.
struct ExperimentPlan {
    std::string algorithm = "tgsr";
    ParamOverrides params;
    std::string benchmark = "sphere";
    std::size_t dimension = 30;
    std::size_t runs = 30;
    std::uint64_t base_seed = 1;
    /// Success cutoff for the success-rate statistic; defaults to
    /// 1e-2 * (1 + |known optimum|) of the benchmark when unset.
    std::optional<double> success_threshold;
    BudgetMode budget_mode = BudgetMode::paper;
    std::uint64_t evaluation_budget = 40000;  ///< used in equal_evaluations mode

    void validate() const {
        if (runs < 1) throw std::invalid_argument("plan: runs must be >= 1");
        if (!is_known_algorithm(algorithm))
            throw std::invalid_argument("unknown algorithm \"" + algorithm + "\"");
        benchmark_from_name(benchmark);
        if (budget_mode == BudgetMode::equal_evaluations && evaluation_budget < 1)
            throw std::invalid_argument("plan: evaluation_budget must be >= 1");
    }
};

struct ExperimentResult {
    ExperimentPlan plan;
    double success_threshold = 0.0;  ///< the resolved cutoff actually used
    ExperimentStats stats;
    std::vector<RunRecord> records;  ///< one per run, in seed order
};

/// Executes the plan's runs (on up to `jobs` worker threads) and aggregates
/// the statistics. Records are keyed by seed, so the result is identical for
/// any jobs value and any execution order.
inline ExperimentResult run_experiment(const ExperimentPlan& plan,
                                       std::size_t jobs = 1) {
    plan.validate();
    const ObjectiveFn objective = make_benchmark(plan.benchmark, plan.dimension);
    // Surface bad overrides before spending any runs.
    validate_algorithm_params(plan.algorithm, plan.params);

    const std::optional<std::uint64_t> budget =
        plan.budget_mode == BudgetMode::equal_evaluations
            ? std::optional<std::uint64_t>(plan.evaluation_budget)
            : std::nullopt;

    std::vector<RunRecord> records(plan.runs);
    auto execute = [&](std::size_t k) {
        records[k] = run_algorithm(plan.algorithm, plan.params, objective,
                                   plan.base_seed + k, budget);
    };

    const std::size_t workers =
        std::max<std::size_t>(1, std::min(jobs, plan.runs));
    if (workers == 1) {
        for (std::size_t k = 0; k < plan.runs; ++k) execute(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&] {
                for (std::size_t k = next.fetch_add(1); k < plan.runs;
                     k = next.fetch_add(1)) {
                    execute(k);
                }
            });
        }
        for (auto& th : threads) th.join();
    }

    ExperimentResult result;
    result.plan = plan;
    result.success_threshold = plan.success_threshold.value_or(
        default_success_threshold(objective.known_optimum));
    result.records = std::move(records);
    result.stats = summarize_runs(result.records, result.success_threshold);
    return result;
}

}  // namespace tgsr
