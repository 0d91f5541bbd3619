// rng.hpp
//
// Deterministic sampling. The one and only generator is std::mt19937_64,
// whose output sequence is pinned by the C++ standard, so a given seed
// produces the same draws on every platform and toolchain. Uniform doubles
// are built from the top 53 bits of a single engine draw; the <random>
// distribution classes are avoided on purpose (their algorithms are
// implementation-defined and would break reproducibility).
//
// Seeds are always explicit arguments. There is no global engine.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace fluxring {

// Uniform in [0, 1) with 53-bit resolution.
inline double uniform_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Stateless per-index seed stream (SplitMix64 finalizer). Monte Carlo trial i
// of a run seeded with s uses derive_seed(s, i), so trials are independent
// and any one of them can be replayed in isolation.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Inverse-CDF draw over a probability vector. The final bucket absorbs the
// rounding remainder, so the walk always lands on a valid index.
inline int sample_index(const std::vector<double>& probs, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    const double u = uniform_unit(gen);
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) return static_cast<int>(i);
    }
    return static_cast<int>(probs.size()) - 1;
}

}  // namespace fluxring
