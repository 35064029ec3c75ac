#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tgsr/experiment.hpp"

namespace tgsr {

enum class ResultFormat { csv, json };

inline ResultFormat result_format_from_name(std::string_view name) {
    if (name == "csv") return ResultFormat::csv;
    if (name == "json") return ResultFormat::json;
    throw std::invalid_argument("unknown result format \"" + std::string(name) +
                                "\" (expected csv or json)");
}

inline std::string to_string(ResultFormat format) {
    return format == ResultFormat::csv ? "csv" : "json";
}

inline BudgetMode budget_mode_from_name(std::string_view name) {
    if (name == "paper") return BudgetMode::paper;
    if (name == "equal" || name == "equal_evaluations")
        return BudgetMode::equal_evaluations;
    throw std::invalid_argument("unknown budget mode \"" + std::string(name) +
                                "\" (expected paper or equal)");
}

inline std::string to_string(BudgetMode mode) {
    return mode == BudgetMode::paper ? "paper" : "equal_evaluations";
}

/// A human-editable experiment plan: a list of experiments plus optional
/// output settings. The on-disk form is JSON (// comments allowed). Every
/// key is checked; unknown keys are rejected with the offending path so
/// typos cannot silently fall back to defaults.
struct PlanFile {
    std::vector<ExperimentPlan> experiments;
    std::string output_dir;  ///< empty means: resolve from --out / environment
    ResultFormat format = ResultFormat::csv;
};

namespace detail {

using planjson = nlohmann::ordered_json;

[[noreturn]] inline void plan_error(const std::string& where,
                                    const std::string& what) {
    throw std::invalid_argument("plan: " + where + ": " + what);
}

inline void reject_unknown_keys(const planjson& object, const std::string& where,
                                std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : object.items()) {
        bool known = false;
        for (auto a : allowed) {
            if (key == a) { known = true; break; }
        }
        if (!known) plan_error(where + "." + key, "unknown key");
    }
}

inline ParamOverrides params_from_json(const planjson& object,
                                       const std::string& where) {
    ParamOverrides overrides;
    if (!object.is_object()) plan_error(where, "expected an object");
    for (const auto& [key, value] : object.items()) {
        if (value.is_boolean()) {
            overrides[key] = value.get<bool>() ? 1.0 : 0.0;
        } else if (value.is_number()) {
            overrides[key] = value.get<double>();
        } else {
            plan_error(where + "." + key, "expected a number or boolean");
        }
    }
    return overrides;
}

template <typename T>
T require(const planjson& object, const std::string& where, const char* key) {
    if (!object.contains(key)) plan_error(where, std::string("missing key \"") + key + "\"");
    try {
        return object.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        plan_error(where + "." + key, "wrong type");
    }
}

template <typename T>
T optional_or(const planjson& object, const std::string& where, const char* key,
              T fallback) {
    if (!object.contains(key)) return fallback;
    try {
        return object.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        plan_error(where + "." + key, "wrong type");
    }
}

// get<unsigned>() would wrap negative inputs, so insist on the parsed type.
inline std::uint64_t optional_unsigned(const planjson& object,
                                       const std::string& where,
                                       const char* key, std::uint64_t fallback) {
    if (!object.contains(key)) return fallback;
    const planjson& value = object.at(key);
    if (!value.is_number_unsigned())
        plan_error(where + "." + key, "expected a non-negative integer");
    return value.get<std::uint64_t>();
}

}  // namespace detail

inline ExperimentPlan experiment_from_json(const detail::planjson& object,
                                           const std::string& where) {
    if (!object.is_object()) detail::plan_error(where, "expected an object");
    detail::reject_unknown_keys(
        object, where,
        {"algorithm", "benchmark", "dimension", "runs", "base_seed",
         "success_threshold", "budget_mode", "evaluation_budget", "params"});

    ExperimentPlan plan;
    plan.algorithm = detail::require<std::string>(object, where, "algorithm");
    plan.benchmark = detail::require<std::string>(object, where, "benchmark");
    plan.dimension = static_cast<std::size_t>(
        detail::optional_unsigned(object, where, "dimension", 30));
    plan.runs = static_cast<std::size_t>(
        detail::optional_unsigned(object, where, "runs", 30));
    plan.base_seed = detail::optional_unsigned(object, where, "base_seed", 1);
    if (object.contains("success_threshold")) {
        plan.success_threshold =
            detail::require<double>(object, where, "success_threshold");
    }
    plan.budget_mode = budget_mode_from_name(detail::optional_or<std::string>(
        object, where, "budget_mode", "paper"));
    plan.evaluation_budget =
        detail::optional_unsigned(object, where, "evaluation_budget", 40000);
    if (object.contains("params")) {
        plan.params =
            detail::params_from_json(object.at("params"), where + ".params");
    }
    plan.validate();
    validate_algorithm_params(plan.algorithm, plan.params);
    return plan;
}

inline PlanFile plan_from_json(const detail::planjson& root) {
    if (!root.is_object()) detail::plan_error("$", "top level must be an object");
    detail::reject_unknown_keys(root, "$", {"output", "experiments"});

    PlanFile plan;
    if (root.contains("output")) {
        const auto& output = root.at("output");
        if (!output.is_object()) detail::plan_error("$.output", "expected an object");
        detail::reject_unknown_keys(output, "$.output", {"dir", "format"});
        plan.output_dir =
            detail::optional_or<std::string>(output, "$.output", "dir", "");
        plan.format = result_format_from_name(detail::optional_or<std::string>(
            output, "$.output", "format", "csv"));
    }
    if (root.contains("experiments")) {
        const auto& experiments = root.at("experiments");
        if (!experiments.is_array())
            detail::plan_error("$.experiments", "expected an array");
        for (std::size_t i = 0; i < experiments.size(); ++i) {
            plan.experiments.push_back(experiment_from_json(
                experiments[i],
                "$.experiments[" + std::to_string(i) + "]"));
        }
    }
    return plan;
}

inline detail::planjson experiment_to_json(const ExperimentPlan& plan) {
    detail::planjson object;
    object["algorithm"] = plan.algorithm;
    object["benchmark"] = plan.benchmark;
    object["dimension"] = plan.dimension;
    object["runs"] = plan.runs;
    object["base_seed"] = plan.base_seed;
    if (plan.success_threshold) {
        object["success_threshold"] = *plan.success_threshold;
    }
    object["budget_mode"] = to_string(plan.budget_mode);
    object["evaluation_budget"] = plan.evaluation_budget;
    if (!plan.params.empty()) {
        detail::planjson params = detail::planjson::object();
        for (const auto& [key, value] : plan.params) params[key] = value;
        object["params"] = params;
    }
    return object;
}

inline detail::planjson plan_to_json(const PlanFile& plan) {
    detail::planjson root;
    detail::planjson output = detail::planjson::object();
    if (!plan.output_dir.empty()) output["dir"] = plan.output_dir;
    output["format"] = to_string(plan.format);
    root["output"] = output;
    root["experiments"] = detail::planjson::array();
    for (const auto& experiment : plan.experiments) {
        root["experiments"].push_back(experiment_to_json(experiment));
    }
    return root;
}

/// Parses a plan file (JSON, // comments allowed). Parse errors carry the
/// byte offset; schema errors carry the JSON path of the offending key.
inline PlanFile parse_plan_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open plan file: " + path.string());
    }
    detail::planjson root;
    try {
        root = detail::planjson::parse(in, nullptr, /*allow_exceptions=*/true,
                                       /*ignore_comments=*/true);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("plan: " + path.string() + ": " + e.what());
    }
    return plan_from_json(root);
}

}  // namespace tgsr
