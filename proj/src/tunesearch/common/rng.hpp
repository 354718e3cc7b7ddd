#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tunesearch {

// Deterministic RNG wrapper. All sampling goes through the helpers below
// instead of std:: distributions, whose output is implementation-defined;
// every run with the same seed must replay bit-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(split_mix(seed)) {}

    // Stable stream derivation for (process, reset) pairs.
    static Rng derive(std::uint64_t master, std::uint64_t process_id, std::uint64_t reset_count) {
        std::uint64_t x = master;
        x = split_mix(x ^ (0x9e3779b97f4a7c15ULL + process_id));
        x = split_mix(x ^ (0xbf58476d1ce4e5b9ULL * (reset_count + 1)));
        return Rng(x);
    }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), n > 0 (Lemire multiply-shift).
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    // Index drawn from a normalized probability vector via CDF inversion.
    std::size_t next_index(std::span<const double> probs) {
        double u = next_double();
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return i;
        }
        return probs.empty() ? 0 : probs.size() - 1;
    }

    double next_weibull(double scale, double shape) {
        double u = next_double();
        return scale * std::pow(-std::log1p(-u), 1.0 / shape);
    }

private:
    static std::uint64_t split_mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

} // namespace tunesearch
