#pragma once

#include <cmath>
#include <cstdint>

namespace patern {

// splitmix64: tiny, fast, and identical on every platform. All randomness in
// the project flows through explicit seeds so that runs are reproducible
// bit-for-bit; std:: distributions are avoided because their outputs are
// implementation-defined.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30u)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27u)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31u);
}

// Mixes an arbitrary number of 64-bit values into one seed.
inline std::uint64_t hash_combine(std::uint64_t a) {
    std::uint64_t s = a;
    return splitmix64(s);
}

template <typename... Rest>
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b, Rest... rest) {
    std::uint64_t s = a ^ (b + 0x9e3779b97f4a7c15ull + (a << 12u) + (a >> 4u));
    return hash_combine(splitmix64(s), rest...);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        // Warm up so that small seeds do not produce correlated first draws.
        splitmix64(state_);
    }

    std::uint64_t next_u64() { return splitmix64(state_); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t uniform_index(std::uint64_t n) {
        // Modulo bias is negligible for n << 2^64 (our n are tiny).
        return next_u64() % n;
    }

    // Standard normal via Box-Muller. Stateless variant (no cached spare) so
    // that the draw count per call is fixed and streams stay aligned.
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

private:
    std::uint64_t state_;
};

}  // namespace patern
