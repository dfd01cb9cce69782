#ifndef LINCOM_RNG_HPP
#define LINCOM_RNG_HPP

#include <cstdint>
#include <random>

namespace lincom {

// Seedable generator used everywhere randomness is needed. The engine is
// std::mt19937_64, whose output sequence is pinned by the standard, and the
// bounded/real mappings below are fixed here, so a (graph, seed) pair
// reproduces the same run on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Unbiased integer in [0, n), n >= 1 (Lemire multiply-shift with rejection).
    std::uint32_t bounded(std::uint32_t n) {
        std::uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t t = (0 - static_cast<std::uint64_t>(n)) % n;
            while (lo < t) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint32_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace lincom

#endif
