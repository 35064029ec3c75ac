#pragma once

#include <algorithm>
#include <cmath>
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

/// Control parameters of the Great Salmon Run optimizer.
///
/// Each iteration the population is split at random into an ocean group
/// (fraction mu) and a canyon group. Ocean members act either as scouts,
/// taking bound-scaled steps whose envelope decays to zero over the run, or
/// as a fisher fleet that extrapolates new candidates from its best member.
/// Canyon members contract around their group best with per-coordinate
/// cosine factors. Proposals replace their parent only when strictly
/// better; afterwards each non-best survivor is re-seeded at random with
/// probability waterfall_prob.
struct TgsrParams {
    double mu = 0.75;               ///< ocean share of the population, in (0,1)
    std::size_t population = 40;    ///< group count, >= 6
    std::size_t max_iter = 10;      ///< migration cycles
    double decay_exponent = 1.6;    ///< scout step decay power, > 1
    double waterfall_prob = 0.1;    ///< per-candidate re-seed probability, in [0,1]
    double scout_fraction = 0.5;    ///< share of ocean members acting as scouts, in (0,1)

    bool protect_best = true;       ///< exempt the global best from waterfall re-seeding
    /// Step the scout's lower branch downward (X - step) instead of the
    /// verbatim upward reading (X + step scaled by distance-to-lower-bound).
    bool symmetric_scout_branches = false;
    /// Draw the decay exponent per proposal from (1, decay_exponent]
    /// instead of using it as a constant.
    bool random_decay_exponent = false;
    /// Contract canyon members around the population-wide best instead of
    /// the canyon-group best.
    bool bear_uses_global_best = false;

    void validate() const {
        if (!(mu > 0.0 && mu < 1.0))
            throw std::invalid_argument("tgsr: mu must lie in (0,1)");
        if (population < 6)
            throw std::invalid_argument("tgsr: population must be >= 6");
        if (max_iter < 1)
            throw std::invalid_argument("tgsr: max_iter must be >= 1");
        if (!(decay_exponent > 1.0))
            throw std::invalid_argument("tgsr: decay_exponent must be > 1");
        if (!(waterfall_prob >= 0.0 && waterfall_prob <= 1.0))
            throw std::invalid_argument("tgsr: waterfall_prob must lie in [0,1]");
        if (!(scout_fraction > 0.0 && scout_fraction < 1.0))
            throw std::invalid_argument("tgsr: scout_fraction must lie in (0,1)");
    }
};

/// Result of the pathway split: ocean gets floor(mu * P) members, canyon the
/// rest; together they are a permutation of the input.
struct PathwaySplit {
    std::vector<Candidate> ocean;
    std::vector<Candidate> canyon;
};

inline std::size_t ocean_group_size(double mu, std::size_t population) {
    const auto n = static_cast<std::size_t>(
        std::floor(mu * static_cast<double>(population)));
    return std::min(n, population);
}

/// Shuffles the members uniformly and deals the first floor(mu * P) to the
/// ocean pathway, the remainder to the canyon pathway.
inline PathwaySplit share_population(std::vector<Candidate> members, double mu,
                                     RngStream& rng) {
    shuffle(members, rng);
    const std::size_t ocean_size = ocean_group_size(mu, members.size());
    PathwaySplit split;
    split.ocean.assign(std::make_move_iterator(members.begin()),
                       std::make_move_iterator(members.begin() + ocean_size));
    split.canyon.assign(std::make_move_iterator(members.begin() + ocean_size),
                        std::make_move_iterator(members.end()));
    return split;
}

/// Scout step for one coordinate: span * u * (1 - t/horizon)^exponent.
/// Zero exactly at t = horizon; past the horizon the base clamps to zero so
/// budget-bound runs that outlive their schedule stop taking scout steps.
inline double decay_step(std::size_t t, std::size_t horizon, double exponent,
                         double span, double u) {
    const double base = std::max(
        0.0, 1.0 - static_cast<double>(t) / static_cast<double>(horizon));
    return span * u * std::pow(base, exponent);
}

/// Recruited-candidate extrapolation: r = better + beta * (better - other).
/// Lies on the ray from `other` through `better` at parameter 1 + beta.
inline std::vector<double> recruit_proposal(std::span<const double> better,
                                            std::span<const double> other,
                                            double beta) {
    std::vector<double> result(better.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
        result[i] = better[i] + beta * (better[i] - other[i]);
    }
    return result;
}

/// Cosine contraction around the group best, one independent angle per
/// coordinate: r[i] = best[i] + cos(angle[i]) * (best[i] - local[i]).
/// Per coordinate the step never exceeds |best[i] - local[i]|.
inline std::vector<double> bear_proposal(std::span<const double> best,
                                         std::span<const double> local,
                                         std::span<const double> angles) {
    std::vector<double> result(best.size());
    for (std::size_t i = 0; i < result.size(); ++i) {
        result[i] = best[i] + std::cos(angles[i]) * (best[i] - local[i]);
    }
    return result;
}

/// Exploration move of one scout at iteration t. A fair coin picks the
/// branch: steps scaled by the distance to the upper bound, or steps scaled
/// by the distance to the lower bound (upward in the verbatim reading,
/// downward when symmetric_scout_branches is set). The result is clamped
/// and evaluated.
inline Candidate scout_move(const Candidate& current, std::size_t t,
                            const TgsrParams& params, Evaluator& eval,
                            RngStream& rng) {
    const SearchSpace& space = eval.space();
    // Random mode draws from (1, decay_exponent], keeping the exponent
    // strictly above 1.
    const double exponent =
        params.random_decay_exponent
            ? params.decay_exponent -
                  rng.next_double() * (params.decay_exponent - 1.0)
            : params.decay_exponent;
    const bool upper_branch = rng.next_double() < 0.5;

    std::vector<double> position(space.dimension());
    for (std::size_t i = 0; i < position.size(); ++i) {
        const double x = current.position[i];
        const double span = upper_branch ? space.upper(i) - x : x - space.lower(i);
        const double step =
            decay_step(t, params.max_iter, exponent, span, rng.next_double());
        const bool downward = !upper_branch && params.symmetric_scout_branches;
        position[i] = downward ? x - step : x + step;
    }
    return eval.make_candidate(clamp_to_bounds(std::move(position), space));
}

/// Exploitation move of one fisher triple: the two hunters are ordered by
/// fitness and the recruited candidate extrapolates past the better one with
/// a single shared beta in [0,1). Clamped and evaluated.
inline Candidate fisher_triple_move(const Candidate& hunter_a,
                                    const Candidate& hunter_b, Evaluator& eval,
                                    RngStream& rng) {
    const Candidate& better =
        hunter_b.fitness < hunter_a.fitness ? hunter_b : hunter_a;
    const Candidate& other =
        hunter_b.fitness < hunter_a.fitness ? hunter_a : hunter_b;
    const double beta = rng.next_double();
    return eval.make_candidate(clamp_to_bounds(
        recruit_proposal(better.position, other.position, beta), eval.space()));
}

/// One canyon move: contracts `local` around `best`. Clamped and evaluated.
inline Candidate bear_move(const Candidate& best, const Candidate& local,
                           Evaluator& eval, RngStream& rng) {
    std::vector<double> angles(eval.space().dimension());
    for (double& a : angles) a = rng.next_angle();
    return eval.make_candidate(clamp_to_bounds(
        bear_proposal(best.position, local.position, angles), eval.space()));
}

/// Independently re-seeds each candidate at a fresh random position with
/// probability wfp; when protect_best is set the minimum-fitness member is
/// exempt. Returns the number of replacements (each one costs one
/// evaluation).
inline std::size_t waterfall_attrition(std::vector<Candidate>& members,
                                       double wfp, Evaluator& eval,
                                       RngStream& rng, bool protect_best) {
    const std::size_t protected_index =
        protect_best && !members.empty()
            ? best_index(members)
            : members.size();
    std::size_t replaced = 0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i == protected_index) continue;
        if (rng.next_double() < wfp) {
            members[i] = eval.make_candidate(random_position(eval.space(), rng));
            ++replaced;
        }
    }
    return replaced;
}

/// Per-iteration bookkeeping: group sizes, move evaluations, and waterfall
/// re-seeds. Together with the initial population these account for every
/// objective call of a run.
struct TgsrIterationStats {
    std::size_t scouts = 0;
    std::size_t fishers = 0;
    std::size_t bears = 0;
    std::size_t proposals = 0;
    std::size_t waterfall_replacements = 0;
};

namespace detail {

// Substream tags, one per stochastic site. Site streams are derived from
// (run seed, site, iteration), so draws at one site never shift another's.
inline constexpr std::uint64_t kInitSite = 0x5eed;
inline constexpr std::uint64_t kShareSite = 1;
inline constexpr std::uint64_t kScoutSite = 2;
inline constexpr std::uint64_t kFisherSite = 3;
inline constexpr std::uint64_t kBearSite = 4;
inline constexpr std::uint64_t kWaterfallSite = 5;

inline RngStream site_stream(const RngStream& run_rng, std::uint64_t site,
                             std::size_t t) {
    return run_rng.substream(site).substream(static_cast<std::uint64_t>(t));
}

}  // namespace detail

/// One full migration cycle over `pop`, in place:
/// split -> scouts + fisher triples (ocean) -> bear moves (canyon) ->
/// regroup -> waterfall attrition. Proposals survive only when strictly
/// better than their parent, so with waterfall protection the population
/// best never worsens.
inline TgsrIterationStats tgsr_iteration(Population& pop, std::size_t t,
                                         const TgsrParams& params,
                                         Evaluator& eval,
                                         const RngStream& run_rng) {
    TgsrIterationStats stats;

    RngStream share_rng = detail::site_stream(run_rng, detail::kShareSite, t);
    PathwaySplit split =
        share_population(std::move(pop.members), params.mu, share_rng);

    // Ocean pathway: leading members scout, the rest fish as triples.
    std::vector<Candidate>& ocean = split.ocean;
    std::size_t scout_count = 0;
    if (!ocean.empty()) {
        scout_count = std::min(
            ocean.size(),
            static_cast<std::size_t>(std::ceil(
                params.scout_fraction * static_cast<double>(ocean.size()))));
    }
    stats.scouts = scout_count;
    stats.fishers = ocean.size() - scout_count;

    RngStream scout_rng = detail::site_stream(run_rng, detail::kScoutSite, t);
    for (std::size_t i = 0; i < scout_count; ++i) {
        Candidate proposal = scout_move(ocean[i], t, params, eval, scout_rng);
        ++stats.proposals;
        if (proposal.fitness < ocean[i].fitness) ocean[i] = std::move(proposal);
    }

    if (stats.fishers >= 2) {
        // The best fisher leads every triple; each other member is the
        // second hunter of exactly one proposal.
        std::stable_sort(ocean.begin() + scout_count, ocean.end(),
                         [](const Candidate& a, const Candidate& b) {
                             return a.fitness < b.fitness;
                         });
        RngStream fisher_rng =
            detail::site_stream(run_rng, detail::kFisherSite, t);
        const Candidate& lead = ocean[scout_count];
        for (std::size_t i = scout_count + 1; i < ocean.size(); ++i) {
            Candidate proposal =
                fisher_triple_move(lead, ocean[i], eval, fisher_rng);
            ++stats.proposals;
            if (proposal.fitness < ocean[i].fitness)
                ocean[i] = std::move(proposal);
        }
    }

    // Canyon pathway: everyone else contracts around the reference best.
    std::vector<Candidate>& canyon = split.canyon;
    stats.bears = canyon.size();
    if (!canyon.empty()) {
        std::size_t reference_in_canyon = best_index(canyon);
        Candidate reference = canyon[reference_in_canyon];
        if (params.bear_uses_global_best && !ocean.empty()) {
            const std::size_t ocean_best = best_index(ocean);
            if (ocean[ocean_best].fitness < reference.fitness) {
                reference = ocean[ocean_best];
                reference_in_canyon = canyon.size();  // reference lives offshore
            }
        }
        if (canyon.size() > 1 || reference_in_canyon == canyon.size()) {
            RngStream bear_rng =
                detail::site_stream(run_rng, detail::kBearSite, t);
            for (std::size_t i = 0; i < canyon.size(); ++i) {
                if (i == reference_in_canyon) continue;
                Candidate proposal =
                    bear_move(reference, canyon[i], eval, bear_rng);
                ++stats.proposals;
                if (proposal.fitness < canyon[i].fitness)
                    canyon[i] = std::move(proposal);
            }
        }
    }

    // Regroup into one container, then run the waterfall gauntlet.
    pop.members = std::move(ocean);
    pop.members.insert(pop.members.end(),
                       std::make_move_iterator(canyon.begin()),
                       std::make_move_iterator(canyon.end()));
    RngStream waterfall_rng =
        detail::site_stream(run_rng, detail::kWaterfallSite, t);
    stats.waterfall_replacements =
        waterfall_attrition(pop.members, params.waterfall_prob, eval,
                            waterfall_rng, params.protect_best);
    pop.refresh_best();
    return stats;
}

/// Expected objective evaluations of one iteration (moves plus the mean
/// number of waterfall re-seeds). Used to size the decay schedule when a
/// run is bounded by an evaluation budget instead of an iteration count.
inline double tgsr_expected_iteration_evaluations(const TgsrParams& params) {
    const std::size_t ocean = ocean_group_size(params.mu, params.population);
    const std::size_t canyon = params.population - ocean;
    std::size_t scouts = 0;
    if (ocean > 0) {
        scouts = std::min(
            ocean, static_cast<std::size_t>(std::ceil(
                       params.scout_fraction * static_cast<double>(ocean))));
    }
    const std::size_t fishers = ocean - scouts;
    const std::size_t fisher_moves = fishers >= 2 ? fishers - 1 : 0;
    const std::size_t bear_moves = canyon >= 2 ? canyon - 1 : 0;
    const double waterfall_mean =
        params.waterfall_prob *
        static_cast<double>(params.population - (params.protect_best ? 1 : 0));
    return static_cast<double>(scouts + fisher_moves + bear_moves) +
           waterfall_mean;
}

struct TgsrRun {
    RunRecord record;
    std::vector<TgsrIterationStats> iterations;
};

/// Full optimization run with per-iteration bookkeeping. When
/// max_evaluations is set the run ignores params.max_iter, re-sizes the
/// decay schedule to the expected iteration count for that budget, and
/// stops at the end of the first iteration that reaches the budget.
inline TgsrRun tgsr_run_detailed(
    const TgsrParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    params.validate();
    TgsrParams effective = params;
    if (max_evaluations) {
        const double per_iter = tgsr_expected_iteration_evaluations(params);
        const double budget_after_init =
            static_cast<double>(*max_evaluations) -
            static_cast<double>(params.population);
        effective.max_iter = static_cast<std::size_t>(
            std::max(1.0, std::ceil(budget_after_init / per_iter)));
    }

    Evaluator eval(objective);
    const RngStream run_rng(seed);
    RngStream init_rng = run_rng.substream(detail::kInitSite);

    Population pop;
    pop.members.reserve(effective.population);
    for (std::size_t i = 0; i < effective.population; ++i) {
        pop.members.push_back(
            eval.make_candidate(random_position(objective.space, init_rng)));
    }
    pop.refresh_best();

    TgsrRun run;
    run.record.seed = seed;
    for (std::size_t t = 1;; ++t) {
        run.iterations.push_back(
            tgsr_iteration(pop, t, effective, eval, run_rng));
        run.record.trace.push_back(pop.best_member().fitness);
        if (max_evaluations) {
            if (eval.count() >= *max_evaluations) break;
        } else if (t >= effective.max_iter) {
            break;
        }
    }
    run.record.final_best = pop.best_member();
    run.record.evaluations = eval.count();
    return run;
}

inline RunRecord tgsr_run(
    const TgsrParams& params, const ObjectiveFn& objective, std::uint64_t seed,
    std::optional<std::uint64_t> max_evaluations = std::nullopt) {
    return tgsr_run_detailed(params, objective, seed, max_evaluations).record;
}

}  // namespace tgsr
