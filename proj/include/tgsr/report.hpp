#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgsr/experiment.hpp"
#include "tgsr/format.hpp"

namespace tgsr {

/// Algorithms x benchmarks grid of batch statistics, the layout used by the
/// benchmark literature: each cell reports quality (mean final best) and
/// robustness (std of final bests), each tagged with the success rate.
struct ComparisonTable {
    std::vector<std::string> algorithms;   ///< row order: first appearance
    std::vector<std::string> benchmarks;   ///< column order: first appearance
    std::size_t dimension = 0;
    std::vector<std::vector<ExperimentStats>> cells;  ///< [algorithm][benchmark]
};

/// Groups results into a complete grid. Every algorithm must cover exactly
/// the same benchmarks; anything else (missing cells, duplicates) is an
/// error, since a ragged comparison would be misleading.
inline ComparisonTable build_comparison(
    const std::vector<ExperimentResult>& results) {
    if (results.empty())
        throw std::invalid_argument("comparison: no experiments");

    ComparisonTable table;
    table.dimension = results.front().plan.dimension;
    auto index_of = [](const std::vector<std::string>& names,
                       const std::string& name) {
        return std::find(names.begin(), names.end(), name) - names.begin();
    };
    for (const ExperimentResult& r : results) {
        if (static_cast<std::size_t>(index_of(table.algorithms,
                                              r.plan.algorithm)) ==
            table.algorithms.size())
            table.algorithms.push_back(r.plan.algorithm);
        if (static_cast<std::size_t>(index_of(table.benchmarks,
                                              r.plan.benchmark)) ==
            table.benchmarks.size())
            table.benchmarks.push_back(r.plan.benchmark);
    }

    table.cells.assign(table.algorithms.size(),
                       std::vector<ExperimentStats>(table.benchmarks.size()));
    std::vector<std::vector<bool>> filled(
        table.algorithms.size(),
        std::vector<bool>(table.benchmarks.size(), false));
    for (const ExperimentResult& r : results) {
        const auto a = index_of(table.algorithms, r.plan.algorithm);
        const auto b = index_of(table.benchmarks, r.plan.benchmark);
        if (filled[a][b])
            throw std::invalid_argument("comparison: duplicate cell " +
                                        r.plan.algorithm + "/" +
                                        r.plan.benchmark);
        table.cells[a][b] = r.stats;
        filled[a][b] = true;
    }
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
        for (std::size_t b = 0; b < table.benchmarks.size(); ++b) {
            if (!filled[a][b])
                throw std::invalid_argument(
                    "comparison: mismatched benchmark sets (missing " +
                    table.algorithms[a] + "/" + table.benchmarks[b] + ")");
        }
    }
    return table;
}

namespace detail {

inline std::string success_percent(double rate) {
    return std::to_string(
               static_cast<long long>(std::llround(rate * 100.0))) +
           "%";
}

inline std::string cell_quality(const ExperimentStats& s) {
    return format_double(s.quality) + " (" + success_percent(s.success_rate) + ")";
}

inline std::string cell_robustness(const ExperimentStats& s) {
    return format_double(s.robustness) + " (" + success_percent(s.success_rate) +
           ")";
}

}  // namespace detail

/// Plain-text rendering: one algorithm per block, two statistic lines per
/// cell (quality on the first, robustness on the second).
inline std::string render_text(const ComparisonTable& table) {
    const std::size_t rows = table.algorithms.size();
    const std::size_t cols = table.benchmarks.size();

    std::vector<std::size_t> widths(cols);
    for (std::size_t b = 0; b < cols; ++b) {
        widths[b] = table.benchmarks[b].size();
        for (std::size_t a = 0; a < rows; ++a) {
            widths[b] = std::max(widths[b],
                                 detail::cell_quality(table.cells[a][b]).size());
            widths[b] = std::max(
                widths[b], detail::cell_robustness(table.cells[a][b]).size());
        }
    }
    std::size_t name_width = std::string("algorithm").size();
    for (const auto& name : table.algorithms)
        name_width = std::max(name_width, name.size());
    const std::size_t stat_width = std::string("robustness").size();

    auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(width - s.size(), ' ');
    };

    std::string out = "comparison of mean best fitness, dimension " +
                      std::to_string(table.dimension) + "\n\n";
    out += pad("algorithm", name_width) + "  " + pad("", stat_width);
    for (std::size_t b = 0; b < cols; ++b)
        out += "  " + pad(table.benchmarks[b], widths[b]);
    out += '\n';
    for (std::size_t a = 0; a < rows; ++a) {
        out += pad(table.algorithms[a], name_width) + "  " +
               pad("quality", stat_width);
        for (std::size_t b = 0; b < cols; ++b)
            out += "  " + pad(detail::cell_quality(table.cells[a][b]), widths[b]);
        out += '\n';
        out += pad("", name_width) + "  " + pad("robustness", stat_width);
        for (std::size_t b = 0; b < cols; ++b)
            out +=
                "  " + pad(detail::cell_robustness(table.cells[a][b]), widths[b]);
        out += '\n';
    }
    return out;
}

/// CSV rendering of the same grid: two rows per algorithm, one column per
/// benchmark, cells as "value (success%)".
inline std::string render_csv(const ComparisonTable& table) {
    std::string out = "algorithm,statistic";
    for (const auto& name : table.benchmarks) out += "," + name;
    out += '\n';
    for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
        out += table.algorithms[a] + ",quality";
        for (std::size_t b = 0; b < table.benchmarks.size(); ++b)
            out += "," + detail::cell_quality(table.cells[a][b]);
        out += '\n';
        out += table.algorithms[a] + ",robustness";
        for (std::size_t b = 0; b < table.benchmarks.size(); ++b)
            out += "," + detail::cell_robustness(table.cells[a][b]);
        out += '\n';
    }
    return out;
}

}  // namespace tgsr
