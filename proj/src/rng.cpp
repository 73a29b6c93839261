#include "s2c/rng.hpp"

#include <cmath>

namespace s2c {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(mix64(mix64(seed ^ 0x243f6a8885a308d3ULL) ^ mix64(stream ^ 0x13198a2e03707344ULL))) {}

std::uint64_t CounterRng::word(std::uint64_t counter) const {
    return mix64(state_ ^ mix64(counter ^ 0xa4093822299f31d0ULL));
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
}

double CounterRng::angle(std::uint64_t counter) const {
    return uniform(counter) * 6.283185307179586476925286766559;
}

int CounterRng::rademacher(std::uint64_t counter) const {
    return (word(counter) >> 63) ? 1 : -1;
}

std::uint64_t CounterRng::below(std::uint64_t counter, std::uint64_t bound) const {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(word(counter)) * bound) >> 64);
}

}  // namespace s2c
