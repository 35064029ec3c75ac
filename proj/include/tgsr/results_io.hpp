#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgsr/experiment.hpp"
#include "tgsr/format.hpp"
#include "tgsr/plan.hpp"

namespace tgsr {

inline constexpr const char* kSummaryCsvHeader =
    "algorithm,benchmark,dimension,runs,quality,robustness,success_rate,"
    "mean_evaluations";

inline std::string summary_csv(const std::vector<ExperimentResult>& results) {
    std::string out = kSummaryCsvHeader;
    out += '\n';
    for (const ExperimentResult& r : results) {
        out += r.plan.algorithm;
        out += ',';
        out += r.plan.benchmark;
        out += ',';
        out += std::to_string(r.plan.dimension);
        out += ',';
        out += std::to_string(r.plan.runs);
        out += ',';
        out += format_double(r.stats.quality);
        out += ',';
        out += format_double(r.stats.robustness);
        out += ',';
        out += format_double(r.stats.success_rate);
        out += ',';
        out += format_double(r.stats.mean_evaluations);
        out += '\n';
    }
    return out;
}

inline std::string trace_csv(const RunRecord& record) {
    std::string out = "iteration,best_fitness\n";
    for (std::size_t i = 0; i < record.trace.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(record.trace[i]);
        out += '\n';
    }
    return out;
}

inline nlohmann::ordered_json record_to_json(const RunRecord& record) {
    nlohmann::ordered_json object;
    object["seed"] = record.seed;
    object["evaluations"] = record.evaluations;
    object["final_fitness"] = record.final_best.fitness;
    object["final_position"] = record.final_best.position;
    object["trace"] = record.trace;
    return object;
}

inline nlohmann::ordered_json result_to_json(const ExperimentResult& result) {
    nlohmann::ordered_json object;
    object["plan"] = experiment_to_json(result.plan);
    object["success_threshold"] = result.success_threshold;
    object["stats"] = {{"quality", result.stats.quality},
                       {"robustness", result.stats.robustness},
                       {"success_rate", result.stats.success_rate},
                       {"mean_evaluations", result.stats.mean_evaluations}};
    object["records"] = nlohmann::ordered_json::array();
    for (const RunRecord& record : result.records) {
        object["records"].push_back(record_to_json(record));
    }
    return object;
}

inline void write_text_file(const std::filesystem::path& path,
                            const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace detail {

inline std::string experiment_stem(const ExperimentResult& result,
                                   std::size_t index) {
    return "e" + std::to_string(index) + "_" + result.plan.algorithm + "_" +
           result.plan.benchmark;
}

}  // namespace detail

/// Persists a batch of experiment results under `dir` and returns the paths
/// written. Both formats write summary.csv (one row per experiment). csv
/// additionally writes one trace file per run under traces/; json writes one
/// results_*.json per experiment holding {plan, stats, records[]} with full
/// traces. Output depends only on the results, so re-running the same plan
/// reproduces every file byte for byte.
inline std::vector<std::filesystem::path> write_results(
    const std::vector<ExperimentResult>& results,
    const std::filesystem::path& dir, ResultFormat format) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory: " + dir.string());

    std::vector<std::filesystem::path> written;
    const auto summary_path = dir / "summary.csv";
    write_text_file(summary_path, summary_csv(results));
    written.push_back(summary_path);

    if (format == ResultFormat::csv) {
        if (!results.empty()) {
            const auto trace_dir = dir / "traces";
            std::filesystem::create_directories(trace_dir, ec);
            if (ec)
                throw std::runtime_error("cannot create directory: " +
                                         trace_dir.string());
            for (std::size_t i = 0; i < results.size(); ++i) {
                for (const RunRecord& record : results[i].records) {
                    const auto path =
                        trace_dir / (detail::experiment_stem(results[i], i) +
                                     "_s" + std::to_string(record.seed) + ".csv");
                    write_text_file(path, trace_csv(record));
                    written.push_back(path);
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto path =
                dir / ("results_" + detail::experiment_stem(results[i], i) +
                       ".json");
            write_text_file(path, result_to_json(results[i]).dump(2) + "\n");
            written.push_back(path);
        }
    }
    return written;
}

}  // namespace tgsr
