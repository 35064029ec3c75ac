#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tgsr/objective.hpp"
#include "tgsr/rng.hpp"
#include "tgsr/run_record.hpp"
#include "tgsr/search_space.hpp"

namespace tgsr {

/// Global-best particle swarm:
///   v <- inertia*v + c1*r1*(pbest - x) + c2*r2*(gbest - x),  x <- x + v
/// with independent r1, r2 per coordinate, velocities clamped to a fraction
/// of the domain width, and positions clamped to the bounds. Personal and
/// global bests update greedily, so the gbest trace never increases.
struct PsoParams {
    std::size_t swarm_size = 100;
    std::size_t max_iter = 100;
    double inertia = 0.72;
    double c1 = 2.0;
    double c2 = 2.0;

    void validate() const {
        if (swarm_size < 2)
            throw std::invalid_argument("pso: swarm_size must be >= 2");
        if (max_iter < 1)
            throw std::invalid_argument("pso: max_iter must be >= 1");
        if (inertia < 0.0)
            throw std::invalid_argument("pso: inertia must be >= 0");
        if (c1 < 0.0 || c2 < 0.0)
            throw std::invalid_argument("pso: c1 and c2 must be >= 0");
    }
};

namespace detail {

// With c1 = c2 = 2 and this inertia the raw dynamics can diverge on wide
// domains, so speed is capped per coordinate at a fraction of the width.
inline constexpr double kPsoVelocityFraction = 0.2;

}  // namespace detail

/// Swarm run from caller-supplied starting positions (one per particle,
/// velocities start at zero). Exposed so degenerate starts are testable.
inline RunRecord pso_run_from(
    const PsoParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::vector<std::vector<double>> initial_positions,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    if (initial_positions.size() != params.swarm_size)
        throw std::invalid_argument("pso: need one start position per particle");
    const SearchSpace& space = objective.space;
    const std::size_t n = space.dimension();

    Evaluator eval(objective);
    RngStream rng = RngStream(seed).substream(0x9507);

    std::vector<Candidate> particles;
    particles.reserve(params.swarm_size);
    for (auto& position : initial_positions) {
        particles.push_back(
            eval.make_candidate(clamp_to_bounds(std::move(position), space)));
    }
    std::vector<std::vector<double>> velocity(
        params.swarm_size, std::vector<double>(n, 0.0));
    std::vector<Candidate> personal_best = particles;
    Candidate global_best = particles[best_index(particles)];

    RunRecord record;
    record.seed = seed;
    for (std::size_t t = 1;; ++t) {
        for (std::size_t p = 0; p < particles.size(); ++p) {
            Candidate& particle = particles[p];
            for (std::size_t i = 0; i < n; ++i) {
                const double r1 = rng.next_double();
                const double r2 = rng.next_double();
                double v = params.inertia * velocity[p][i] +
                           params.c1 * r1 *
                               (personal_best[p].position[i] - particle.position[i]) +
                           params.c2 * r2 *
                               (global_best.position[i] - particle.position[i]);
                const double cap = detail::kPsoVelocityFraction * space.width(i);
                v = std::clamp(v, -cap, cap);
                velocity[p][i] = v;
                particle.position[i] = std::clamp(particle.position[i] + v,
                                                  space.lower(i), space.upper(i));
            }
            particle.fitness = eval.evaluate(particle.position);
            if (particle.fitness < personal_best[p].fitness) {
                personal_best[p] = particle;
                if (particle.fitness < global_best.fitness) global_best = particle;
            }
        }
        record.trace.push_back(global_best.fitness);
        if (max_evaluations) {
            if (eval.count() >= *max_evaluations) break;
        } else if (t >= params.max_iter) {
            break;
        }
    }
    record.final_best = global_best;
    record.evaluations = eval.count();
    return record;
}

inline RunRecord pso_run(
    const PsoParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    RngStream init_rng = RngStream(seed).substream(0x1507);
    std::vector<std::vector<double>> starts;
    starts.reserve(params.swarm_size);
    for (std::size_t i = 0; i < params.swarm_size; ++i) {
        starts.push_back(random_position(objective.space, init_rng));
    }
    return pso_run_from(params, objective, seed, std::move(starts),
                        max_evaluations);
}

}  // namespace tgsr
