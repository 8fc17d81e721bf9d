#pragma once

#include <cstdint>
#include <random>

namespace spinflux {

// splitmix64 finalizer; used to derive independent child seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of ensemble instance k. Depends only on (master, k), never on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return mix64(mix64(master) ^ mix64(k + 0x5851f42d4c957f2dULL));
}

// Deterministic stream. The std distributions are implementation-defined,
// so conversions to doubles and bounded integers are done here.
class Stream {
public:
    explicit Stream(std::uint64_t seed) : eng_(mix64(seed)) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform integer on [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace spinflux
