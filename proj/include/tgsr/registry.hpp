#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tgsr/differential_evolution.hpp"
#include "tgsr/format.hpp"
#include "tgsr/pso.hpp"
#include "tgsr/random_search.hpp"
#include "tgsr/salmon_run.hpp"

namespace tgsr {

/// Parameter overrides addressed by key, as they arrive from plan files and
/// `--set key=value` flags. Booleans are 0/1. std::map keeps iteration
/// order deterministic.
using ParamOverrides = std::map<std::string, double>;

namespace detail {

class OverrideReader {
  public:
    OverrideReader(std::string algorithm, const ParamOverrides& overrides)
        : algorithm_(std::move(algorithm)), overrides_(overrides) {}

    void apply(const std::string& key, double& field) {
        if (auto it = overrides_.find(key); it != overrides_.end()) {
            field = it->second;
            seen_.push_back(key);
        }
    }
    template <typename T>
        requires(std::unsigned_integral<T> && !std::same_as<T, bool>)
    void apply(const std::string& key, T& field) {
        if (auto it = overrides_.find(key); it != overrides_.end()) {
            if (it->second < 0.0 || it->second != std::floor(it->second))
                throw std::invalid_argument(algorithm_ + ": parameter \"" + key +
                                            "\" must be a non-negative integer");
            field = static_cast<T>(it->second);
            seen_.push_back(key);
        }
    }
    void apply(const std::string& key, bool& field) {
        if (auto it = overrides_.find(key); it != overrides_.end()) {
            field = it->second != 0.0;
            seen_.push_back(key);
        }
    }

    /// Every override key must have matched a parameter.
    void finish() const {
        for (const auto& [key, value] : overrides_) {
            bool known = false;
            for (const auto& s : seen_) {
                if (s == key) { known = true; break; }
            }
            if (!known)
                throw std::invalid_argument(algorithm_ + ": unknown parameter \"" +
                                            key + "\"");
        }
    }

  private:
    std::string algorithm_;
    const ParamOverrides& overrides_;
    std::vector<std::string> seen_;
};

}  // namespace detail

inline TgsrParams tgsr_params_from(const ParamOverrides& overrides) {
    TgsrParams p;
    detail::OverrideReader reader("tgsr", overrides);
    reader.apply("mu", p.mu);
    reader.apply("population", p.population);
    reader.apply("max_iter", p.max_iter);
    reader.apply("decay_exponent", p.decay_exponent);
    reader.apply("waterfall_prob", p.waterfall_prob);
    reader.apply("scout_fraction", p.scout_fraction);
    reader.apply("protect_best", p.protect_best);
    reader.apply("symmetric_scout_branches", p.symmetric_scout_branches);
    reader.apply("random_decay_exponent", p.random_decay_exponent);
    reader.apply("bear_uses_global_best", p.bear_uses_global_best);
    reader.finish();
    p.validate();
    return p;
}

inline PsoParams pso_params_from(const ParamOverrides& overrides) {
    PsoParams p;
    detail::OverrideReader reader("pso", overrides);
    reader.apply("swarm_size", p.swarm_size);
    reader.apply("max_iter", p.max_iter);
    reader.apply("inertia", p.inertia);
    reader.apply("c1", p.c1);
    reader.apply("c2", p.c2);
    reader.finish();
    p.validate();
    return p;
}

inline DeaParams dea_params_from(const ParamOverrides& overrides) {
    DeaParams p;
    detail::OverrideReader reader("dea", overrides);
    reader.apply("population", p.population);
    reader.apply("max_iter", p.max_iter);
    reader.apply("f_weight", p.f_weight);
    reader.apply("crossover", p.crossover);
    reader.finish();
    p.validate();
    return p;
}

inline RandomSearchParams random_params_from(const ParamOverrides& overrides) {
    RandomSearchParams p;
    detail::OverrideReader reader("random", overrides);
    reader.apply("evaluations", p.evaluations);
    reader.apply("block_size", p.block_size);
    reader.finish();
    p.validate();
    return p;
}

struct AlgorithmInfo {
    std::string name;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> defaults;
};

inline const std::vector<AlgorithmInfo>& algorithm_catalog() {
    static const std::vector<AlgorithmInfo> catalog = [] {
        std::vector<AlgorithmInfo> out;
        {
            const TgsrParams d;
            out.push_back(
                {"tgsr",
                 "Great Salmon Run: two-pathway population search",
                 {{"mu", format_double(d.mu)},
                  {"population", std::to_string(d.population)},
                  {"max_iter", std::to_string(d.max_iter)},
                  {"decay_exponent", format_double(d.decay_exponent)},
                  {"waterfall_prob", format_double(d.waterfall_prob)},
                  {"scout_fraction", format_double(d.scout_fraction)},
                  {"protect_best", d.protect_best ? "1" : "0"},
                  {"symmetric_scout_branches",
                   d.symmetric_scout_branches ? "1" : "0"},
                  {"random_decay_exponent", d.random_decay_exponent ? "1" : "0"},
                  {"bear_uses_global_best",
                   d.bear_uses_global_best ? "1" : "0"}}});
        }
        {
            const PsoParams d;
            out.push_back({"pso",
                           "global-best particle swarm",
                           {{"swarm_size", std::to_string(d.swarm_size)},
                            {"max_iter", std::to_string(d.max_iter)},
                            {"inertia", format_double(d.inertia)},
                            {"c1", format_double(d.c1)},
                            {"c2", format_double(d.c2)}}});
        }
        {
            const DeaParams d;
            out.push_back({"dea",
                           "differential evolution, rand/1/bin",
                           {{"population", std::to_string(d.population)},
                            {"max_iter", std::to_string(d.max_iter)},
                            {"f_weight", format_double(d.f_weight)},
                            {"crossover", format_double(d.crossover)}}});
        }
        {
            const RandomSearchParams d;
            out.push_back({"random",
                           "uniform random sampling baseline",
                           {{"evaluations", std::to_string(d.evaluations)},
                            {"block_size", std::to_string(d.block_size)}}});
        }
        return out;
    }();
    return catalog;
}

inline bool is_known_algorithm(std::string_view name) {
    for (const auto& info : algorithm_catalog()) {
        if (info.name == name) return true;
    }
    return false;
}

/// Builds and validates the named algorithm's parameters without running
/// anything; throws on unknown algorithm, unknown key, or invalid value.
inline void validate_algorithm_params(const std::string& name,
                                      const ParamOverrides& overrides) {
    if (name == "tgsr") { (void)tgsr_params_from(overrides); return; }
    if (name == "pso") { (void)pso_params_from(overrides); return; }
    if (name == "dea") { (void)dea_params_from(overrides); return; }
    if (name == "random") { (void)random_params_from(overrides); return; }
    throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

/// Runs one seeded optimization of `objective` with the named algorithm,
/// overrides applied over the defaults. A set max_evaluations replaces the
/// iteration budget.
inline RunRecord run_algorithm(
    const std::string& name, const ParamOverrides& overrides,
    const ObjectiveFn& objective, std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    if (name == "tgsr")
        return tgsr_run(tgsr_params_from(overrides), objective, seed,
                        max_evaluations);
    if (name == "pso")
        return pso_run(pso_params_from(overrides), objective, seed,
                       max_evaluations);
    if (name == "dea")
        return dea_run(dea_params_from(overrides), objective, seed,
                       max_evaluations);
    if (name == "random")
        return random_search_run(random_params_from(overrides), objective, seed,
                                 max_evaluations);
    throw std::invalid_argument("unknown algorithm \"" + name + "\"");
}

}  // namespace tgsr
