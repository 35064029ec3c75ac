#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tgsr/objective.hpp"
#include "tgsr/rng.hpp"
#include "tgsr/run_record.hpp"
#include "tgsr/search_space.hpp"

namespace tgsr {

/// DE/rand/1/bin: mutant = x_a + F*(x_b - x_c) over distinct non-target
/// members, binomial crossover at rate CR with one forced coordinate,
/// greedy one-to-one selection into the next generation.
struct DeaParams {
    std::size_t population = 50;
    std::size_t max_iter = 100;
    double f_weight = 1.25;   ///< differential weight F
    double crossover = 0.3;   ///< crossover rate CR, in [0,1]

    void validate() const {
        if (population < 4)
            throw std::invalid_argument(
                "dea: population must be >= 4 (mutation needs three distinct others)");
        if (max_iter < 1)
            throw std::invalid_argument("dea: max_iter must be >= 1");
        if (!(crossover >= 0.0 && crossover <= 1.0))
            throw std::invalid_argument("dea: crossover must lie in [0,1]");
    }
};

/// Binomial crossover: each coordinate comes from the mutant with
/// probability cr; coordinate j_rand always does, so the trial differs from
/// the target somewhere. Coin draws are consumed for every coordinate, which
/// keeps the draw count independent of cr.
inline std::vector<double> binomial_crossover(std::span<const double> target,
                                              std::span<const double> mutant,
                                              double cr, RngStream& rng) {
    std::vector<double> trial(target.size());
    const std::size_t forced = rng.next_index(target.size());
    for (std::size_t j = 0; j < trial.size(); ++j) {
        const bool from_mutant = rng.next_double() < cr || j == forced;
        trial[j] = from_mutant ? mutant[j] : target[j];
    }
    return trial;
}

/// Generation loop from caller-supplied starting positions.
inline RunRecord dea_run_from(
    const DeaParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::vector<std::vector<double>> initial_positions,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    if (initial_positions.size() != params.population)
        throw std::invalid_argument("dea: need one start position per member");
    const SearchSpace& space = objective.space;
    const std::size_t n = space.dimension();

    Evaluator eval(objective);
    RngStream rng = RngStream(seed).substream(0xdea);

    std::vector<Candidate> members;
    members.reserve(params.population);
    for (auto& position : initial_positions) {
        members.push_back(
            eval.make_candidate(clamp_to_bounds(std::move(position), space)));
    }

    RunRecord record;
    record.seed = seed;
    std::vector<Candidate> next(members.size());
    for (std::size_t t = 1;; ++t) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::size_t a = i, b = i, c = i;
            while (a == i) a = rng.next_index(members.size());
            while (b == i || b == a) b = rng.next_index(members.size());
            while (c == i || c == a || c == b) c = rng.next_index(members.size());

            std::vector<double> mutant(n);
            for (std::size_t j = 0; j < n; ++j) {
                mutant[j] = members[a].position[j] +
                            params.f_weight * (members[b].position[j] -
                                               members[c].position[j]);
            }
            Candidate trial = eval.make_candidate(clamp_to_bounds(
                binomial_crossover(members[i].position, mutant,
                                   params.crossover, rng),
                space));
            next[i] = trial.fitness <= members[i].fitness ? std::move(trial)
                                                          : members[i];
        }
        members.swap(next);
        record.trace.push_back(members[best_index(members)].fitness);
        if (max_evaluations) {
            if (eval.count() >= *max_evaluations) break;
        } else if (t >= params.max_iter) {
            break;
        }
    }
    record.final_best = members[best_index(members)];
    record.evaluations = eval.count();
    return record;
}

inline RunRecord dea_run(
    const DeaParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    RngStream init_rng = RngStream(seed).substream(0x1dea);
    std::vector<std::vector<double>> starts;
    starts.reserve(params.population);
    for (std::size_t i = 0; i < params.population; ++i) {
        starts.push_back(random_position(objective.space, init_rng));
    }
    return dea_run_from(params, objective, seed, std::move(starts),
                        max_evaluations);
}

}  // namespace tgsr
