#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tgsr/cli.hpp"
#include "tgsr/plan.hpp"

using tgsr::ExperimentPlan;
using tgsr::PlanFile;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

bool plans_equal(const ExperimentPlan& a, const ExperimentPlan& b) {
    return a.algorithm == b.algorithm && a.benchmark == b.benchmark &&
           a.dimension == b.dimension && a.runs == b.runs &&
           a.base_seed == b.base_seed &&
           a.success_threshold == b.success_threshold &&
           a.budget_mode == b.budget_mode &&
           a.evaluation_budget == b.evaluation_budget && a.params == b.params;
}

}  // namespace

TEST_CASE("a minimal plan fills in the defaults") {
    const auto path = write_temp("tgsr_minimal_plan.json", R"({
      // comments are allowed in plan files
      "experiments": [
        {"algorithm": "tgsr", "benchmark": "sphere"}
      ]
    })");
    const PlanFile plan = tgsr::parse_plan_file(path);
    REQUIRE(plan.experiments.size() == 1);
    const ExperimentPlan& e = plan.experiments[0];
    REQUIRE(e.dimension == 30);
    REQUIRE(e.runs == 30);
    REQUIRE(e.base_seed == 1);
    REQUIRE(!e.success_threshold.has_value());
    REQUIRE(e.budget_mode == tgsr::BudgetMode::paper);
    REQUIRE(plan.format == tgsr::ResultFormat::csv);
}

TEST_CASE("unknown keys are rejected with their location") {
    const auto path = write_temp("tgsr_bad_key_plan.json", R"({
      "experiments": [
        {"algorithm": "tgsr", "benchmark": "sphere", "fancy_knob": 3}
      ]
    })");
    REQUIRE_THROWS_WITH(
        tgsr::parse_plan_file(path),
        Catch::Matchers::ContainsSubstring("$.experiments[0].fancy_knob"));
}

TEST_CASE("plan validation failures carry the reason") {
    const auto runs_zero = write_temp("tgsr_zero_runs_plan.json", R"({
      "experiments": [{"algorithm": "tgsr", "benchmark": "sphere", "runs": 0}]
    })");
    REQUIRE_THROWS_WITH(tgsr::parse_plan_file(runs_zero),
                        Catch::Matchers::ContainsSubstring("runs"));

    const auto negative = write_temp("tgsr_negative_plan.json", R"({
      "experiments": [{"algorithm": "tgsr", "benchmark": "sphere", "runs": -3}]
    })");
    REQUIRE_THROWS_WITH(tgsr::parse_plan_file(negative),
                        Catch::Matchers::ContainsSubstring("non-negative"));

    const auto bad_param = write_temp("tgsr_bad_param_plan.json", R"({
      "experiments": [{"algorithm": "pso", "benchmark": "sphere",
                       "params": {"warp_drive": 9}}]
    })");
    REQUIRE_THROWS_WITH(tgsr::parse_plan_file(bad_param),
                        Catch::Matchers::ContainsSubstring("warp_drive"));

    const auto syntax = write_temp("tgsr_syntax_plan.json", "{ not json");
    REQUIRE_THROWS_AS(tgsr::parse_plan_file(syntax), std::invalid_argument);
}

TEST_CASE("plans round-trip through their serialized form") {
    PlanFile plan;
    plan.output_dir = "out";
    plan.format = tgsr::ResultFormat::json;
    ExperimentPlan e;
    e.algorithm = "dea";
    e.benchmark = "rosenbrock";
    e.dimension = 12;
    e.runs = 4;
    e.base_seed = 99;
    e.success_threshold = 0.5;
    e.budget_mode = tgsr::BudgetMode::equal_evaluations;
    e.evaluation_budget = 12345;
    e.params = {{"crossover", 0.9}, {"population", 24.0}};
    plan.experiments.push_back(e);
    ExperimentPlan minimal;
    minimal.algorithm = "random";
    minimal.benchmark = "schaffer";
    plan.experiments.push_back(minimal);

    const PlanFile reparsed = tgsr::plan_from_json(tgsr::plan_to_json(plan));
    REQUIRE(reparsed.output_dir == plan.output_dir);
    REQUIRE(reparsed.format == plan.format);
    REQUIRE(reparsed.experiments.size() == plan.experiments.size());
    for (std::size_t i = 0; i < plan.experiments.size(); ++i)
        REQUIRE(plans_equal(reparsed.experiments[i], plan.experiments[i]));
}

TEST_CASE("--set arguments parse into overrides") {
    const auto overrides =
        tgsr::parse_set_args({"mu=0.8", "population=60", "protect_best=false"});
    REQUIRE(overrides.at("mu") == 0.8);
    REQUIRE(overrides.at("population") == 60.0);
    REQUIRE(overrides.at("protect_best") == 0.0);
    REQUIRE_THROWS_WITH(tgsr::parse_set_args({"mu"}),
                        Catch::Matchers::ContainsSubstring("mu"));
    REQUIRE_THROWS_WITH(tgsr::parse_set_args({"mu=fast"}),
                        Catch::Matchers::ContainsSubstring("fast"));
}

TEST_CASE("cmd_run prints the result and repeats itself exactly") {
    tgsr::RunCommand cmd;
    cmd.algorithm = "tgsr";
    cmd.benchmark = "sphere";
    cmd.dimension = 5;
    cmd.seed = 3;
    cmd.set_args = {"population=10", "max_iter=5"};

    std::ostringstream out1, err1, out2, err2;
    REQUIRE(tgsr::cmd_run(cmd, out1, err1) == 0);
    REQUIRE(tgsr::cmd_run(cmd, out2, err2) == 0);
    REQUIRE(out1.str() == out2.str());
    REQUIRE(out1.str().find("final best:") != std::string::npos);
    REQUIRE(err1.str().empty());
}

TEST_CASE("cmd_run fails loudly on a bad algorithm name") {
    tgsr::RunCommand cmd;
    cmd.algorithm = "nosuch";
    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_run(cmd, out, err) == 1);
    REQUIRE(err.str().find("nosuch") != std::string::npos);
}

TEST_CASE("cmd_list names every algorithm with its defaults") {
    std::ostringstream out;
    REQUIRE(tgsr::cmd_list(out) == 0);
    const std::string text = out.str();
    for (const char* needle :
         {"tgsr", "pso", "dea", "random", "mu=0.75", "population=40",
          "decay_exponent=1.6", "waterfall_prob=0.1", "swarm_size=100",
          "inertia=0.72", "f_weight=1.25", "crossover=0.3"}) {
        INFO(needle);
        REQUIRE(text.find(needle) != std::string::npos);
    }
    for (const auto& name : tgsr::benchmark_names()) {
        REQUIRE(text.find(name) != std::string::npos);
    }
}

TEST_CASE("cmd_experiment runs a small plan end to end") {
    const auto out_dir =
        std::filesystem::temp_directory_path() / "tgsr_cmd_experiment";
    std::filesystem::remove_all(out_dir);
    const auto path = write_temp("tgsr_small_plan.json", R"({
      "experiments": [
        {"algorithm": "tgsr", "benchmark": "sphere", "dimension": 3,
         "runs": 2, "params": {"population": 8, "max_iter": 4}},
        {"algorithm": "random", "benchmark": "sphere", "dimension": 3,
         "runs": 2, "params": {"evaluations": 40}}
      ]
    })");

    tgsr::ExperimentCommand cmd;
    cmd.plan_path = path.string();
    cmd.out_dir = out_dir.string();
    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_experiment(cmd, out, err) == 0);
    REQUIRE(err.str().empty());
    REQUIRE(std::filesystem::exists(out_dir / "summary.csv"));
    REQUIRE(std::filesystem::exists(out_dir / "comparison.csv"));
    REQUIRE(out.str().find("quality") != std::string::npos);
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("cmd_experiment with an empty plan writes only headers") {
    const auto out_dir =
        std::filesystem::temp_directory_path() / "tgsr_cmd_empty";
    std::filesystem::remove_all(out_dir);
    const auto path = write_temp("tgsr_empty_plan.json", R"({"experiments": []})");
    tgsr::ExperimentCommand cmd;
    cmd.plan_path = path.string();
    cmd.out_dir = out_dir.string();
    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_experiment(cmd, out, err) == 0);
    REQUIRE(std::filesystem::exists(out_dir / "summary.csv"));
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("cmd_run batches runs and reports the statistics") {
    tgsr::RunCommand cmd;
    cmd.algorithm = "random";
    cmd.benchmark = "sphere";
    cmd.dimension = 4;
    cmd.seed = 10;
    cmd.runs = 3;
    cmd.set_args = {"evaluations=50"};

    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_run(cmd, out, err) == 0);
    const std::string text = out.str();
    REQUIRE(text.find("seeds 10..12") != std::string::npos);
    REQUIRE(text.find("seed 11:") != std::string::npos);
    REQUIRE(text.find("quality:") != std::string::npos);
    REQUIRE(text.find("robustness:") != std::string::npos);
}

TEST_CASE("a single-algorithm plan still yields a comparison row") {
    const auto out_dir =
        std::filesystem::temp_directory_path() / "tgsr_cmd_row";
    std::filesystem::remove_all(out_dir);
    const auto path = write_temp("tgsr_row_plan.json", R"({
      "experiments": [
        {"algorithm": "tgsr", "benchmark": "sphere", "dimension": 3,
         "runs": 2, "params": {"population": 8, "max_iter": 4}},
        {"algorithm": "tgsr", "benchmark": "rastrigin", "dimension": 3,
         "runs": 2, "params": {"population": 8, "max_iter": 4}}
      ]
    })");
    tgsr::ExperimentCommand cmd;
    cmd.plan_path = path.string();
    cmd.out_dir = out_dir.string();
    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_experiment(cmd, out, err) == 0);

    std::ifstream grid(out_dir / "comparison.csv");
    std::string header;
    std::getline(grid, header);
    REQUIRE(header == "algorithm,statistic,sphere,rastrigin");
    std::size_t data_rows = 0;
    for (std::string line; std::getline(grid, line);) ++data_rows;
    REQUIRE(data_rows == 2);  // one algorithm: quality + robustness
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("the output directory falls back to the environment variable") {
    const auto out_dir =
        std::filesystem::temp_directory_path() / "tgsr_env_out";
    std::filesystem::remove_all(out_dir);
    ::setenv(tgsr::kOutputDirEnvVar, out_dir.string().c_str(), 1);
    const auto path =
        write_temp("tgsr_env_plan.json", R"({"experiments": []})");
    tgsr::ExperimentCommand cmd;
    cmd.plan_path = path.string();
    std::ostringstream out, err;
    const int rc = tgsr::cmd_experiment(cmd, out, err);
    ::unsetenv(tgsr::kOutputDirEnvVar);
    REQUIRE(rc == 0);
    REQUIRE(std::filesystem::exists(out_dir / "summary.csv"));
    std::filesystem::remove_all(out_dir);
}

TEST_CASE("cmd_experiment propagates plan errors as a nonzero exit") {
    tgsr::ExperimentCommand cmd;
    cmd.plan_path = "does_not_exist_anywhere.json";
    std::ostringstream out, err;
    REQUIRE(tgsr::cmd_experiment(cmd, out, err) == 1);
    REQUIRE(err.str().find("does_not_exist_anywhere") != std::string::npos);
}
