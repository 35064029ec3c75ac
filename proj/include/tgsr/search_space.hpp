#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgsr/rng.hpp"

namespace tgsr {

/// Axis-aligned box of feasible positions. Construction rejects empty or
/// inverted intervals, so everything downstream may assume
/// lower[i] < upper[i] for every coordinate.
class SearchSpace {
  public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.empty() || lower_.size() != upper_.size()) {
            throw std::invalid_argument(
                "SearchSpace: bounds must be non-empty vectors of equal length");
        }
        for (std::size_t i = 0; i < lower_.size(); ++i) {
            if (!(lower_[i] < upper_[i])) {
                throw std::invalid_argument(
                    "SearchSpace: lower bound must be strictly below upper bound "
                    "(coordinate " + std::to_string(i) + ")");
            }
        }
    }

    /// Hypercube [lower, upper]^dimension.
    static SearchSpace cube(std::size_t dimension, double lower, double upper) {
        if (dimension == 0) {
            throw std::invalid_argument("SearchSpace: dimension must be >= 1");
        }
        return SearchSpace(std::vector<double>(dimension, lower),
                           std::vector<double>(dimension, upper));
    }

    std::size_t dimension() const noexcept { return lower_.size(); }
    const std::vector<double>& lower() const noexcept { return lower_; }
    const std::vector<double>& upper() const noexcept { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }
    double width(std::size_t i) const { return upper_[i] - lower_[i]; }

    bool contains(std::span<const double> x) const {
        if (x.size() != dimension()) return false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
        }
        return true;
    }

  private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Maps unit-cube coordinates onto the box: r[i] = lower[i] + u[i]*(upper[i]-lower[i]).
inline std::vector<double> unit_to_bounds(const SearchSpace& space,
                                          std::span<const double> unit) {
    assert(unit.size() == space.dimension());
    std::vector<double> position(space.dimension());
    for (std::size_t i = 0; i < position.size(); ++i) {
        position[i] = space.lower(i) + unit[i] * space.width(i);
    }
    return position;
}

/// Uniform sample over the box, one independent [0,1) draw per coordinate.
inline std::vector<double> random_position(const SearchSpace& space, RngStream& rng) {
    std::vector<double> position(space.dimension());
    for (std::size_t i = 0; i < position.size(); ++i) {
        position[i] = space.lower(i) + rng.next_double() * space.width(i);
    }
    return position;
}

/// Coordinate-wise repair: out-of-range values snap to the violated bound,
/// in-range values are untouched. Idempotent.
inline std::vector<double> clamp_to_bounds(std::vector<double> position,
                                           const SearchSpace& space) {
    assert(position.size() == space.dimension());
    for (std::size_t i = 0; i < position.size(); ++i) {
        position[i] = std::min(space.upper(i), std::max(space.lower(i), position[i]));
    }
    return position;
}

}  // namespace tgsr
