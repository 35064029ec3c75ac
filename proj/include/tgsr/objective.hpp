#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgsr/search_space.hpp"

namespace tgsr {

/// A minimization target: deterministic, total on its search space.
/// known_optimum is the global minimum value (used for success statistics).
struct ObjectiveFn {
    std::string name;
    SearchSpace space;
    double known_optimum = 0.0;
    std::function<double(std::span<const double>)> evaluate;

    double operator()(std::span<const double> x) const { return evaluate(x); }
};

/// A position with its cached objective value. The cache is maintained by
/// constructing candidates through Evaluator::make_candidate, which is the
/// only place positions get evaluated; that keeps the evaluation budget
/// auditable.
struct Candidate {
    std::vector<double> position;
    double fitness = 0.0;
};

/// Index of the minimum-fitness member; ties break toward the lowest index.
inline std::size_t best_index(std::span<const Candidate> members) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < members.size(); ++i) {
        if (members[i].fitness < members[best].fitness) best = i;
    }
    return best;
}

struct Population {
    std::vector<Candidate> members;
    std::size_t best = 0;

    void refresh_best() { best = best_index(members); }
    const Candidate& best_member() const { return members[best]; }
    std::size_t size() const noexcept { return members.size(); }
};

/// Counts every objective call made through it. One Evaluator per run.
class Evaluator {
  public:
    explicit Evaluator(const ObjectiveFn& objective) : objective_(&objective) {}

    double evaluate(std::span<const double> position) {
        ++count_;
        return (*objective_)(position);
    }

    Candidate make_candidate(std::vector<double> position) {
        const double fitness = evaluate(position);
        return Candidate{std::move(position), fitness};
    }

    std::uint64_t count() const noexcept { return count_; }
    const ObjectiveFn& objective() const noexcept { return *objective_; }
    const SearchSpace& space() const noexcept { return objective_->space; }

  private:
    const ObjectiveFn* objective_;
    std::uint64_t count_ = 0;
};

}  // namespace tgsr
