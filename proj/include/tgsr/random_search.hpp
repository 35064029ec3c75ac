#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tgsr/objective.hpp"
#include "tgsr/rng.hpp"
#include "tgsr/run_record.hpp"
#include "tgsr/search_space.hpp"

namespace tgsr {

/// Pure random sampling, the null-hypothesis baseline: the best of
/// `evaluations` independent uniform samples. The trace records the running
/// best once per block of samples.
struct RandomSearchParams {
    std::uint64_t evaluations = 4000;
    std::size_t block_size = 100;

    void validate() const {
        if (evaluations < 1)
            throw std::invalid_argument("random: evaluations must be >= 1");
        if (block_size < 1)
            throw std::invalid_argument("random: block_size must be >= 1");
    }
};

inline RunRecord random_search_run(
    const RandomSearchParams& params, const ObjectiveFn& objective,
    std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    const std::uint64_t budget = max_evaluations.value_or(params.evaluations);
    if (budget < 1)
        throw std::invalid_argument("random: evaluation budget must be >= 1");

    Evaluator eval(objective);
    RngStream rng = RngStream(seed).substream(0x7a2d);

    RunRecord record;
    record.seed = seed;
    Candidate best;
    for (std::uint64_t drawn = 0; drawn < budget;) {
        const std::uint64_t block =
            std::min<std::uint64_t>(params.block_size, budget - drawn);
        for (std::uint64_t k = 0; k < block; ++k) {
            Candidate sample =
                eval.make_candidate(random_position(objective.space, rng));
            if (drawn + k == 0 || sample.fitness < best.fitness)
                best = std::move(sample);
        }
        drawn += block;
        record.trace.push_back(best.fitness);
    }
    record.final_best = best;
    record.evaluations = eval.count();
    return record;
}

}  // namespace tgsr
