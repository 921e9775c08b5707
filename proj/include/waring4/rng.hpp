// Deterministic random source. All randomized searches in the library draw
// from this generator so that identical seeds reproduce identical output,
// independent of the standard library's distribution implementations.
#pragma once

#include <cstdint>
#include <random>

#include "waring4/rational.hpp"

namespace waring4 {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive. Modulo bias is irrelevant at
    // the ranges used here.
    long long uniform(long long lo, long long hi) {
        if (hi < lo) throw std::runtime_error("Rng::uniform: empty range");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
        return lo + static_cast<long long>(eng_() % span);
    }

    // Integer scalar in [-g, g].
    Scalar grid(long long g) { return Scalar(uniform(-g, g)); }

    // Integer scalar in [-g, g] \ {0}.
    Scalar grid_nonzero(long long g) {
        for (;;) {
            Scalar s = grid(g);
            if (s != 0) return s;
        }
    }

    // Independent child stream; used to keep batch tasks order-insensitive.
    Rng split(std::uint64_t index) const {
        std::uint64_t s = seed_mix_ ^ (0x9e3779b97f4a7c15ull * (index + 1));
        return Rng(s);
    }

    static Rng seeded(std::uint64_t seed) {
        Rng r(seed);
        r.seed_mix_ = seed;
        return r;
    }

  private:
    std::mt19937_64 eng_;
    std::uint64_t seed_mix_ = 0;
};

}  // namespace waring4
