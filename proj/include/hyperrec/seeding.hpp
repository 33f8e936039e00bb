#ifndef HYPERREC_SEEDING_HPP
#define HYPERREC_SEEDING_HPP

// seeding.hpp - deterministic seed derivation and portable random draws
//
// All randomness in the library flows through these helpers on top of
// std::mt19937_64, whose output sequence is fixed by the standard.  The
// distribution adapters in <random> are not portable across standard
// libraries, so we roll our own here.

#include <cmath>
#include <cstdint>
#include <random>

namespace hyperrec {

// SplitMix64 finalizer; good avalanche, cheap to compute.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent substream seed from a base seed and a lane id.
inline uint64_t derive_seed(uint64_t base, uint64_t lane) {
    return splitmix64(splitmix64(base ^ 0x6a09e667f3bcc909ULL) + lane);
}

inline uint64_t derive_seed(uint64_t base, uint64_t lane, uint64_t sub) {
    return derive_seed(derive_seed(base, lane), sub);
}

// Uniform integer in [0, bound) without modulo bias.  bound must be >= 1.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Binomial(trials, p) by inversion.  Large trial counts are split into
// chunks small enough that the pmf at zero stays above double underflow;
// the chunk draws are independent so their sum has the exact distribution.
inline uint64_t binomial_draw(std::mt19937_64& rng, uint64_t trials, double p) {
    if (!(p > 0.0)) return 0;
    if (p >= 1.0) return trials;
    const double log_q = std::log1p(-p);
    uint64_t max_chunk = 1;
    if (-log_q < 500.0) {
        double limit = 500.0 / -log_q;
        max_chunk = limit > 1.0 ? static_cast<uint64_t>(limit) : 1;
    }
    uint64_t total = 0;
    while (trials > 0) {
        const uint64_t c = trials < max_chunk ? trials : max_chunk;
        if (c == 1) {
            if (uniform_unit(rng) < p) ++total;
        } else {
            double u = uniform_unit(rng);
            double f = std::exp(static_cast<double>(c) * log_q);
            const double r = p / (1.0 - p);
            uint64_t k = 0;
            while (u > f && k < c) {
                u -= f;
                f *= r * static_cast<double>(c - k) / static_cast<double>(k + 1);
                ++k;
            }
            total += k;
        }
        trials -= c;
    }
    return total;
}

}  // namespace hyperrec

#endif
