// rng.hpp: seedable, splittable random source for every stochastic oracle.
//
// Each Rng wraps a 64-bit Mersenne Twister. Child streams are derived with
// SplitMix64 so that (seed, index) pairs map to well-separated states and
// parallel workers never share a generator.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace resinfo::oracle {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const noexcept { return seed_; }

    // Independent child stream; deterministic in (seed, index).
    Rng split(std::uint64_t index) const { return Rng(splitmix64(seed_ ^ splitmix64(index + 1))); }

    double normal() { return normal_(engine_); }

    // Chi variable with k degrees of freedom.
    double chi(double k) {
        std::chi_squared_distribution<double> d(k);
        return std::sqrt(d(engine_));
    }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace resinfo::oracle
