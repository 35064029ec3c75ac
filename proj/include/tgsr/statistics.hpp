#pragma once

#include <cmath>
#include <cstdlib>
#include <span>
#include <vector>

#include "tgsr/run_record.hpp"

namespace tgsr {

inline double mean(std::span<const double> values) {
    if (values.empty()) return 0.0;
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

/// Sample standard deviation (n-1 denominator); 0 for fewer than two values.
inline double sample_std(std::span<const double> values) {
    if (values.size() < 2) return 0.0;
    const double m = mean(values);
    double sum_sq = 0.0;
    for (double v : values) sum_sq += (v - m) * (v - m);
    return std::sqrt(sum_sq / static_cast<double>(values.size() - 1));
}

/// Batch statistics in the benchmark-report sense: quality is the mean of
/// final best fitnesses, robustness their sample standard deviation, and
/// success_rate the fraction of runs whose final best lies at or below the
/// success threshold.
struct ExperimentStats {
    double quality = 0.0;
    double robustness = 0.0;
    double success_rate = 0.0;
    double mean_evaluations = 0.0;
};

/// A run counts as successful when its final best is within 1% of scale
/// around the known optimum. The reported success percentages depend
/// directly on this choice; plans may override it per experiment.
inline double default_success_threshold(double known_optimum) {
    return 1e-2 * (1.0 + std::abs(known_optimum));
}

inline ExperimentStats summarize_runs(std::span<const RunRecord> records,
                                      double success_threshold) {
    ExperimentStats stats;
    if (records.empty()) return stats;
    std::vector<double> finals;
    std::vector<double> evals;
    finals.reserve(records.size());
    evals.reserve(records.size());
    std::size_t successes = 0;
    for (const RunRecord& r : records) {
        finals.push_back(r.final_best.fitness);
        evals.push_back(static_cast<double>(r.evaluations));
        if (r.final_best.fitness <= success_threshold) ++successes;
    }
    stats.quality = mean(finals);
    stats.robustness = sample_std(finals);
    stats.success_rate =
        static_cast<double>(successes) / static_cast<double>(records.size());
    stats.mean_evaluations = mean(evals);
    return stats;
}

}  // namespace tgsr
