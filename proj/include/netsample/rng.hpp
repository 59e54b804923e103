#ifndef NETSAMPLE_RNG_HPP
#define NETSAMPLE_RNG_HPP

#include <cassert>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace netsample {

/// splitmix64 finalizer, used to hash seeds for independent streams.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the stream identified by (master, a, b). Runs, trials and
/// helper streams each get their own derivation so they stay independent
/// and reproducible regardless of execution order.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a,
                                           std::uint64_t b = 0) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

/// Deterministic random stream. Bounded draws are implemented here rather
/// than with std distributions, whose output is not specified across
/// standard library implementations; mt19937_64 itself is fully specified,
/// so identical seeds give identical traces on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound == 0 is a bug.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound > 0);
        if (bound <= 1) return 0;
        // rejection keeps the result exactly uniform
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % bound;
        for (;;) {
            std::uint64_t u = next_u64();
            if (u < limit) return u % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double real01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real01() < p; }

    /// Fisher-Yates shuffle driven by this stream.
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace netsample

#endif
