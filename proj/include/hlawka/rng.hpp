#ifndef HLAWKA_RNG_HPP
#define HLAWKA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

#include "hlawka/scalar.hpp"

namespace hlawka {

/**
Deterministic generator for sampling campaigns (splitmix64 core). Every
draw is a pure function of the seed and the draw sequence, so identical
configurations reproduce identical trials byte for byte, and per-trial
seeds can be derived independently for parallel execution.
*/
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [lo, hi], inclusive.
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next_u64() % span);
    }

    /// Standard normal via the polar method.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = uniform(-1.0, 1.0);
            v = uniform(-1.0, 1.0);
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    /// Exact rational with value in [lo, hi] and denominator in [1, max_den].
    Scalar rational(long long lo, long long hi, long long max_den) {
        const long long den = uniform_int(1, max_den);
        const long long num = uniform_int(lo * den, hi * den);
        return Scalar(num, den);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Per-trial seed, decoupled across suites and trial indices.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view label,
                                 std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL ^ base;
    for (const char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= index + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    Rng scramble(h);
    return scramble.next_u64();
}

} // namespace hlawka

#endif
