#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace tgsr {

/// splitmix64 finalizer; used to turn seeds and tags into well-mixed state.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic random stream: the same seed produces the same draw
/// sequence on every platform. Raw bits come from mt19937_64 (pinned by the
/// standard); doubles are built from the top 53 bits rather than through
/// std::uniform_real_distribution, whose output is implementation-defined.
///
/// Streams are cheap value types. substream() derives an independent child
/// stream from the parent's seed (not its state), so each stochastic site in
/// an algorithm can own a stream whose draws do not depend on how other
/// sites interleave.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), gen_(mix64(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform on [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform on [0, 2*pi).
    double next_angle() { return next_double() * (2.0 * std::numbers::pi); }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform on {0, ..., n-1}, unbiased via rejection. Requires n >= 1.
    std::size_t next_index(std::size_t n) {
        const std::uint64_t span = n;
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return static_cast<std::size_t>(v % span);
    }

    /// Child stream for the given tag, derived from this stream's seed only.
    /// Calling it never consumes draws and always yields the same child.
    RngStream substream(std::uint64_t tag) const {
        return RngStream(mix64(seed_ ^ mix64(tag)));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

/// Fisher-Yates shuffle driven by an RngStream (std::shuffle is not
/// reproducible across standard libraries).
template <typename T>
void shuffle(std::vector<T>& items, RngStream& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        using std::swap;
        swap(items[i - 1], items[rng.next_index(i)]);
    }
}

}  // namespace tgsr
