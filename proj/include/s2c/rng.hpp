#pragma once

#include <cstdint>
#include <string_view>

namespace s2c {

// 64-bit FNV-1a hash. Used to derive RNG stream tags from strings and to
// fingerprint configuration bytes.
std::uint64_t fnv1a(std::string_view s);

// Murmur3-style 64-bit finalizer; bijective, well-mixed.
std::uint64_t mix64(std::uint64_t x);

// Stateless counter-based generator. Every draw is a pure function of
// (seed, stream, counter): callers may consume counters in any order, from
// any number of threads, and still reproduce the exact same values. All
// distributions are hand-rolled so results are identical across platforms
// and standard-library versions.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t word(std::uint64_t counter) const;

    // Uniform in [0, 1), 53 random bits.
    double uniform(std::uint64_t counter) const;
    double uniform(std::uint64_t counter, double lo, double hi) const;

    // Uniform angle in [0, 2*pi).
    double angle(std::uint64_t counter) const;

    // -1 or +1 with equal probability.
    int rademacher(std::uint64_t counter) const;

    // Integer in [0, bound); bound must be nonzero.
    std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const;

private:
    std::uint64_t state_;
};

}  // namespace s2c
