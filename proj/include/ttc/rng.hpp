#pragma once

#include <cstdint>

namespace ttc {

// Deterministic generator used everywhere randomness is needed.  We never use
// <random> distributions: their output is implementation-defined and the CLI
// promises bit-identical results for identical invocations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n >= 1, by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t limit = ~0ULL - (~0ULL % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t s_;
};

// Subseed derivation: hash(seed, step, attempt).  Keeps concurrent attempts
// independent and reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ULL * (a + 1)) ^ (0xd6e8feb86659fd93ULL * (b + 1)));
    g.next();
    return g.next();
}

}  // namespace ttc
