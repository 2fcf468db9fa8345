#ifndef TVLAB_RNG_HPP
#define TVLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "tvlab/errors.hpp"

namespace tvlab {

// std::mt19937_64 output is pinned by the standard, so seeded runs reproduce
// across toolchains.  std::uniform_int_distribution is not pinned, hence the
// hand-rolled draws below.
using RandomEngine = std::mt19937_64;

// Distinct deterministic streams from one user-facing seed.
inline RandomEngine seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return RandomEngine(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

// Unbiased uniform draw from {0, ..., n-1} by rejection.
inline std::uint64_t rand_below(RandomEngine& engine, std::uint64_t n) {
    if (n == 0) throw PreconditionError("rand_below: empty range");
    const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
    std::uint64_t draw = engine();
    while (draw < threshold) draw = engine();
    return draw % n;
}

// Uniform draw from the inclusive integer interval [lo, hi].
inline long long rand_between(RandomEngine& engine, long long lo, long long hi) {
    if (lo > hi) throw PreconditionError("rand_between: empty interval");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(rand_below(engine, span));
}

} // namespace tvlab

#endif
