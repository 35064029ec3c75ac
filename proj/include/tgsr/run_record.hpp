#pragma once

#include <cstdint>
#include <vector>

#include "tgsr/objective.hpp"

namespace tgsr {

/// What one seeded optimization run leaves behind: the best fitness after
/// every iteration, the final best candidate, and the exact number of
/// objective evaluations spent. trace is monotone non-increasing and its
/// last element equals final_best.fitness.
struct RunRecord {
    std::uint64_t seed = 0;
    std::vector<double> trace;
    Candidate final_best;
    std::uint64_t evaluations = 0;
};

}  // namespace tgsr
