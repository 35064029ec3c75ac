// Calibration sweep behind the pinned acceptance thresholds: runs the
// benchmark batches at the same budgets the acceptance suite uses and prints
// median / percentile final-best values per algorithm and function.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "tgsr/tgsr.hpp"

namespace {

double percentile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    const double rank = p * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(rank);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = rank - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<double> finals(const std::string& algo, const std::string& bench,
                           tgsr::BudgetMode mode, std::uint64_t budget,
                           std::size_t runs, std::size_t jobs) {
    tgsr::ExperimentPlan plan;
    plan.algorithm = algo;
    plan.benchmark = bench;
    plan.dimension = 30;
    plan.runs = runs;
    plan.base_seed = 1;
    plan.budget_mode = mode;
    plan.evaluation_budget = budget;
    const auto result = tgsr::run_experiment(plan, jobs);
    std::vector<double> values;
    values.reserve(result.records.size());
    for (const auto& r : result.records) values.push_back(r.final_best.fitness);
    return values;
}

void report(const std::string& label, const std::vector<double>& values) {
    std::cout << label << ": median " << tgsr::format_double(percentile(values, 0.5))
              << ", p90 " << tgsr::format_double(percentile(values, 0.9))
              << ", max " << tgsr::format_double(*std::max_element(values.begin(),
                                                                   values.end()))
              << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t jobs = argc > 1 ? std::stoul(argv[1]) : 2;
    const std::size_t runs = 30;

    std::cout << "== equal budget, 40000 evaluations, dimension 30, " << runs
              << " seeds ==\n";
    for (const std::string& bench : tgsr::benchmark_names()) {
        report("tgsr   " + bench,
               finals("tgsr", bench, tgsr::BudgetMode::equal_evaluations, 40000,
                      runs, jobs));
        report("random " + bench,
               finals("random", bench, tgsr::BudgetMode::equal_evaluations,
                      40000, runs, jobs));
    }

    std::cout << "== configured (paper) budgets, dimension 30, " << runs
              << " seeds ==\n";
    for (const std::string& bench : {std::string("rastrigin"),
                                     std::string("rosenbrock")}) {
        for (const std::string& algo :
             {std::string("tgsr"), std::string("pso"), std::string("dea")}) {
            report(algo + " " + bench,
                   finals(algo, bench, tgsr::BudgetMode::paper, 0, runs, jobs));
        }
    }
    return 0;
}
