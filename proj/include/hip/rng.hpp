#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace hip {

// Distribution transforms are hand-rolled on top of std::mt19937_64 so that
// streams replay bit-exactly across standard library implementations
// (std::*_distribution is not pinned by the standard).
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi], hi inclusive
    int64_t uniform_int(int64_t lo, int64_t hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        return lo + static_cast<int64_t>(gen_() % span);
    }

    bool coin() { return (gen_() & 1u) != 0; }

    // Box-Muller, consumes two draws per pair
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// SplitMix64; used as a stateless per-coordinate hash for noise fields.
inline uint64_t hash_mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t a, uint64_t b) {
    return hash_mix(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

// deterministic uniform in [0,1) from a hashed coordinate tuple
inline double hash_uniform(uint64_t key) {
    return static_cast<double>(hash_mix(key) >> 11) * 0x1.0p-53;
}

// deterministic standard normal from a hashed coordinate tuple
inline double hash_normal(uint64_t key) {
    double u1 = hash_uniform(key);
    const double u2 = hash_uniform(key ^ 0x5851f42d4c957f2dULL);
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace hip
