#include "binpack/rng.hpp"

#include "binpack/rational.hpp"

namespace binpack {

std::uint64_t RngStream::mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

RngStream RngStream::derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = mix(seed);
    s = mix(s ^ (a * 0x9E3779B97F4A7C15ULL + 1));
    s = mix(s ^ (b * 0xBF58476D1CE4E5B9ULL + 1));
    return RngStream(s);
}

std::uint64_t RngStream::next_u64() { return eng_(); }

std::uint64_t RngStream::next_below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "next_below: empty range");
    if ((n & (n - 1)) == 0) return next_u64() & (n - 1);
    const std::uint64_t limit = (UINT64_MAX / n) * n;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return x % n;
}

double RngStream::next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

}  // namespace binpack
