// Plugging in a user-defined objective: any deterministic function over a
// bounded box works. Here: a shifted, rotated-free quadratic valley.

#include <iostream>
#include <span>

#include "tgsr/salmon_run.hpp"

int main() {
    const std::size_t n = 8;

    tgsr::ObjectiveFn objective{
        "shifted_quadratic",
        tgsr::SearchSpace::cube(n, -10.0, 10.0),
        0.0,
        [](std::span<const double> x) {
            double sum = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double d = x[i] - 0.5 * static_cast<double>(i);
                sum += (1.0 + static_cast<double>(i)) * d * d;
            }
            return sum;
        }};

    tgsr::TgsrParams params;
    params.max_iter = 150;

    const tgsr::RunRecord record = tgsr::tgsr_run(params, objective, /*seed=*/3);
    std::cout << "final best " << record.final_best.fitness << "\nposition:";
    for (double v : record.final_best.position) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}
