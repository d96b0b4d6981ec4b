#pragma once

// Deterministic random streams: splitmix64 expands a 64-bit seed into the
// 256-bit state of a xoshiro256** generator. Both follow the published
// reference algorithms bit-for-bit, so any implementation language can
// reproduce the same streams.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xlcvrp::rng {

struct Splitmix64 {
    std::uint64_t state;

    explicit Splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        Splitmix64 sm(seed);
        for (auto& w : s_) w = sm.next();
        if (s_[0] == 0 && s_[1] == 0 && s_[2] == 0 && s_[3] == 0) s_[0] = 1;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased draw in [0, n) by rejection of the low residue range.
    std::uint64_t bounded(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Inclusive integer range.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        bounded(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // 53-bit double in [0, 1).
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform_real(double lo, double hi) {
        return lo + uniform01() * (hi - lo);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> s_;
};

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

// The generator draws from one stream per purpose so that changing how many
// values one stage consumes never shifts the draws of another stage.
inline constexpr std::array<std::string_view, 5> kStreamTags = {
    "depot", "positions", "clusters", "demands", "route_size"};

inline Xoshiro256ss derive_stream(std::uint64_t master_seed, std::string_view purpose) {
    bool known = false;
    for (auto tag : kStreamTags) known = known || (tag == purpose);
    if (!known)
        throw std::invalid_argument("derive_stream: unknown stream tag '" +
                                    std::string(purpose) + "'");
    return Xoshiro256ss(master_seed ^ fnv1a64(purpose));
}

}  // namespace xlcvrp::rng
