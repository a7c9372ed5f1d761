#pragma once

#include <cstdint>
#include <random>

namespace binpack {

/// Seeded random stream. The engine is mt19937_64 (output sequence fixed by
/// the standard) and all bounded draws use rejection sampling, so results do
/// not depend on the platform's std distribution implementations.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    /// Independent stream addressed by (seed, a, b); streams with different
    /// addresses are decorrelated via splitmix64 mixing.
    static RngStream derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

    /// One splitmix64 round; also used to derive per-instance seeds.
    static std::uint64_t mix(std::uint64_t x);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t next_u64();
    std::uint64_t next_below(std::uint64_t n);  // uniform on [0, n), n >= 1
    double next_unit();                         // uniform on [0, 1)

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

}  // namespace binpack
