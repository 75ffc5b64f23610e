#pragma once

#include <cstdint>
#include <random>

#include "cubic/rational.hpp"

namespace cubic {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic seeded generator. mt19937_64 output is pinned by the
// standard; bounded draws use rejection sampling instead of
// std::uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() { return gen_(); }

    // Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = gen_();
        while (v >= limit) v = gen_();
        return lo + static_cast<long long>(v % span);
    }

    Rational rational_in(long long lo, long long hi) {
        return make_rational(uniform(lo, hi));
    }

    // Independent child stream; same (seed, tag) always yields the same child.
    Rng derive(std::uint64_t tag) const {
        return Rng(splitmix64(seed_ ^ splitmix64(tag)));
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace cubic
