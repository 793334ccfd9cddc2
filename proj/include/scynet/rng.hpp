#pragma once

// Deterministic randomness. Two generators:
//  - Xoshiro256pp for simulation noise (delays, search perturbations);
//  - DigestRng, a SHA-256 counter-mode stream, for protocol draws
//    (challenger selection, proposer selection) where the seed is chain data.
// std::random distributions are not byte-portable across standard library
// implementations, so uniform/gaussian sampling is done by hand.

#include <cmath>

#include "scynet/common.hpp"
#include "scynet/crypto.hpp"

namespace scynet {

inline uint64_t splitmix64(uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed = 0) {
        uint64_t x = seed;
        for (auto& w : s_) w = splitmix64(x);
    }

    uint64_t next() {
        auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0, 1)
    double uniform() { return double(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [lo, hi], inclusive
    uint64_t uniform_u64(uint64_t lo, uint64_t hi) {
        uint64_t span = hi - lo + 1;
        if (span == 0) return next();  // full range
        // multiply-shift; bias is negligible for simulation purposes and
        // the mapping is identical on every platform
        unsigned __int128 m = (unsigned __int128)next() * span;
        return lo + uint64_t(m >> 64);
    }

    // Box-Muller; consumes two uniforms per pair, caches the second.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = uniform(); } while (u1 <= 0.0);
        u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::array<uint8_t, 32> next_key() {
        std::array<uint8_t, 32> k;
        for (int i = 0; i < 4; ++i) {
            uint64_t w = next();
            for (int j = 0; j < 8; ++j) k[i * 8 + j] = uint8_t(w >> (56 - 8 * j));
        }
        return k;
    }

private:
    std::array<uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Counter-mode stream over a 32-byte seed: block i = SHA256(seed || i).
class DigestRng {
public:
    explicit DigestRng(const Hash256& seed) : seed_(seed) {}

    uint64_t next() {
        if (offset_ + 8 > 32) refill();
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | block_[offset_ + i];
        offset_ += 8;
        return v;
    }

    // uniform integer in [1, total], via rejection sampling (exact)
    uint64_t draw_in_total(uint64_t total) {
        if (total == 0) return 0;
        uint64_t limit = UINT64_MAX - (UINT64_MAX % total);
        uint64_t v;
        do { v = next(); } while (v >= limit);
        return 1 + (v % total);
    }

private:
    void refill() {
        Bytes material(seed_.begin(), seed_.end());
        for (int i = 7; i >= 0; --i) material.push_back(uint8_t(counter_ >> (i * 8)));
        block_ = sha256(material);
        ++counter_;
        offset_ = 0;
    }

    Hash256 seed_;
    Hash256 block_{};
    uint64_t counter_ = 0;
    size_t offset_ = 32;  // forces refill on first use
};

}  // namespace scynet
