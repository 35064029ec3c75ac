#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tgsr/objective.hpp"

namespace tgsr {

/// The classic unconstrained test suite. All five take their standard
/// literature definitions, have global minimum value 0, and use the
/// conventional box bounds:
///
///   schaffer    sum of pairwise F6 terms,             [-100, 100]^n,   min at origin
///   sphere      sum x_i^2,                            [-100, 100]^n,   min at origin
///   griewank    1 + sum x_i^2/4000 - prod cos(x_i/sqrt(i)),
///                                                     [-600, 600]^n,   min at origin
///   rastrigin   10n + sum (x_i^2 - 10 cos(2 pi x_i)), [-5.12, 5.12]^n, min at origin
///   rosenbrock  sum 100(x_{i+1}-x_i^2)^2 + (1-x_i)^2, [-30, 30]^n,     min at (1,...,1)
///
/// schaffer is the summed-over-consecutive-pairs variant of the 2-D F6
/// function, which makes it well defined at any dimension >= 2 (the classic
/// F6 is its n = 2 case). schaffer and rosenbrock need n >= 2; the rest
/// accept n >= 1.
enum class BenchmarkId { Schaffer, Sphere, Griewank, Rastrigin, Rosenbrock };

namespace detail {

inline double sphere_value(std::span<const double> x) {
    double sum = 0.0;
    for (double v : x) sum += v * v;
    return sum;
}

inline double rastrigin_value(std::span<const double> x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (double v : x) {
        sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    }
    return sum;
}

inline double griewank_value(std::span<const double> x) {
    double sum = 0.0;
    double prod = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += x[i] * x[i] / 4000.0;
        prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + sum - prod;
}

inline double rosenbrock_value(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

inline double schaffer_value(std::span<const double> x) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double r2 = x[i] * x[i] + x[i + 1] * x[i + 1];
        const double s = std::sin(std::sqrt(r2));
        const double denom = 1.0 + 0.001 * r2;
        sum += 0.5 + (s * s - 0.5) / (denom * denom);
    }
    return sum;
}

}  // namespace detail

inline std::size_t min_dimension(BenchmarkId id) {
    return (id == BenchmarkId::Schaffer || id == BenchmarkId::Rosenbrock) ? 2 : 1;
}

inline ObjectiveFn make_benchmark(BenchmarkId id, std::size_t dimension) {
    if (dimension < min_dimension(id)) {
        throw std::invalid_argument("benchmark requires dimension >= " +
                                    std::to_string(min_dimension(id)));
    }
    switch (id) {
        case BenchmarkId::Schaffer:
            return {"schaffer", SearchSpace::cube(dimension, -100.0, 100.0), 0.0,
                    detail::schaffer_value};
        case BenchmarkId::Sphere:
            return {"sphere", SearchSpace::cube(dimension, -100.0, 100.0), 0.0,
                    detail::sphere_value};
        case BenchmarkId::Griewank:
            return {"griewank", SearchSpace::cube(dimension, -600.0, 600.0), 0.0,
                    detail::griewank_value};
        case BenchmarkId::Rastrigin:
            return {"rastrigin", SearchSpace::cube(dimension, -5.12, 5.12), 0.0,
                    detail::rastrigin_value};
        case BenchmarkId::Rosenbrock:
            return {"rosenbrock", SearchSpace::cube(dimension, -30.0, 30.0), 0.0,
                    detail::rosenbrock_value};
    }
    throw std::invalid_argument("unknown benchmark id");
}

/// Names accepted on the CLI and in plan files, in reporting order.
inline const std::vector<std::string>& benchmark_names() {
    static const std::vector<std::string> names = {
        "schaffer", "sphere", "griewank", "rastrigin", "rosenbrock"};
    return names;
}

inline BenchmarkId benchmark_from_name(std::string_view name) {
    if (name == "schaffer") return BenchmarkId::Schaffer;
    if (name == "sphere") return BenchmarkId::Sphere;
    if (name == "griewank") return BenchmarkId::Griewank;
    if (name == "rastrigin") return BenchmarkId::Rastrigin;
    if (name == "rosenbrock") return BenchmarkId::Rosenbrock;
    throw std::invalid_argument("unknown benchmark \"" + std::string(name) + "\"");
}

inline ObjectiveFn make_benchmark(std::string_view name, std::size_t dimension) {
    return make_benchmark(benchmark_from_name(name), dimension);
}

}  // namespace tgsr
