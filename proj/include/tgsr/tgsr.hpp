#pragma once

// Umbrella header: the whole library.

#include "tgsr/benchmarks.hpp"
#include "tgsr/cli.hpp"
#include "tgsr/differential_evolution.hpp"
#include "tgsr/experiment.hpp"
#include "tgsr/format.hpp"
#include "tgsr/objective.hpp"
#include "tgsr/plan.hpp"
#include "tgsr/pso.hpp"
#include "tgsr/random_search.hpp"
#include "tgsr/registry.hpp"
#include "tgsr/report.hpp"
#include "tgsr/results_io.hpp"
#include "tgsr/rng.hpp"
#include "tgsr/run_record.hpp"
#include "tgsr/salmon_run.hpp"
#include "tgsr/search_space.hpp"
#include "tgsr/statistics.hpp"
