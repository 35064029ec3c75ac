// Minimal library tour: run the salmon-run optimizer on a stock benchmark
// and print how the best fitness improves.

#include <iostream>

#include "tgsr/benchmarks.hpp"
#include "tgsr/salmon_run.hpp"

int main() {
    const tgsr::ObjectiveFn objective = tgsr::make_benchmark("rastrigin", 10);

    tgsr::TgsrParams params;
    params.max_iter = 200;

    const tgsr::RunRecord record = tgsr::tgsr_run(params, objective, /*seed=*/7);

    std::cout << "rastrigin, dimension 10, seed 7\n";
    for (std::size_t t = 0; t < record.trace.size(); t += 20) {
        std::cout << "  iter " << (t + 1) << ": best " << record.trace[t] << "\n";
    }
    std::cout << "final best " << record.final_best.fitness << " after "
              << record.evaluations << " evaluations\n";
    return 0;
}
