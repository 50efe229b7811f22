#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace aegisnet {

/// Deterministic random source. All distribution logic is written out here so
/// that a given seed produces the same stream regardless of the standard
/// library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling over the top multiple of bound
        const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
        std::uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    /// Uniform integer in [lo, hi] inclusive.
    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    void fill(std::span<std::uint8_t> out) {
        std::size_t i = 0;
        while (i < out.size()) {
            std::uint64_t v = next_u64();
            for (int j = 0; j < 8 && i < out.size(); ++j, ++i) {
                out[i] = static_cast<std::uint8_t>(v >> (8 * j));
            }
        }
    }

    /// Derives an independent stream for a named subsystem from a master seed.
    static Rng stream(std::uint64_t master_seed, std::string_view label) {
        // FNV-1a over the label, mixed with the seed through splitmix64
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (char c : label) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 0x100000001b3ull;
        }
        std::uint64_t z = master_seed + 0x9e3779b97f4a7c15ull + h;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        z = z ^ (z >> 31);
        return Rng(z);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace aegisnet
