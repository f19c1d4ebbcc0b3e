#pragma once

#include <cstdint>
#include <random>

#include "dr/vec.hpp"

namespace dr {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic uniform stream. Doubles are produced from raw engine
/// output, not from std::uniform_real_distribution, so that identical
/// seeds give identical sequences on every platform.
class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Independent stream for restart `k` of a run seeded with `seed`.
    static UniformRng for_restart(std::uint64_t seed, std::uint64_t k) {
        return UniformRng(splitmix64(seed) ^ splitmix64(k + 1));
    }

    /// Uniform on [0, 1).
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double next(double lo, double hi) { return lo + (hi - lo) * next(); }

    Point point(std::size_t dim, double lo = 0.0, double hi = 1.0) {
        Point p(dim);
        for (double& v : p) v = next(lo, hi);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace dr
