#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <vector>

#include "tgsr/rng.hpp"

using tgsr::RngStream;

TEST_CASE("identical seeds reproduce the draw sequence") {
    RngStream a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(a.next_double() == b.next_double());
    }
}

TEST_CASE("different seeds diverge") {
    RngStream a(1), b(2);
    bool any_different = false;
    for (int i = 0; i < 16 && !any_different; ++i) {
        any_different = a.next_double() != b.next_double();
    }
    REQUIRE(any_different);
}

TEST_CASE("doubles lie in [0,1) and average near one half") {
    RngStream rng(7);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    REQUIRE(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("next_index stays in range and hits every bucket") {
    RngStream rng(3);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const std::size_t k = rng.next_index(7);
        REQUIRE(k < 7);
        ++counts[k];
    }
    for (int c : counts) REQUIRE(c > 0);
    REQUIRE(rng.next_index(1) == 0);
}

TEST_CASE("substreams are reproducible and independent of parent draws") {
    RngStream parent(99);
    RngStream child_before = parent.substream(5);
    for (int i = 0; i < 10; ++i) parent.next_double();
    RngStream child_after = parent.substream(5);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(child_before.next_double() == child_after.next_double());
    }
}

TEST_CASE("substreams with different tags differ") {
    RngStream parent(99);
    RngStream a = parent.substream(1);
    RngStream b = parent.substream(2);
    bool any_different = false;
    for (int i = 0; i < 16 && !any_different; ++i) {
        any_different = a.next_double() != b.next_double();
    }
    REQUIRE(any_different);
}

TEST_CASE("shuffle is a seed-stable permutation") {
    std::vector<int> items = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    RngStream rng(11);
    tgsr::shuffle(items, rng);

    std::vector<int> again = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    RngStream rng2(11);
    tgsr::shuffle(again, rng2);
    REQUIRE(items == again);

    REQUIRE(std::set<int>(items.begin(), items.end()).size() == 10);
}
