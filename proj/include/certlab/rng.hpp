#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

// Deterministic RNG contract.
//
// Every randomized computation in this project draws from one generator
// family so that runs are reproducible bit-for-bit from their seeds and
// portable across languages:
//
//   * seeding: splitmix64 over the 64-bit seed produces the four words of
//     the xoshiro256** state (all-zero states are impossible because
//     splitmix64 output is never all zero four times in a row; we also
//     force a nonzero word);
//   * stream:  xoshiro256** (Blackman/Vigna);
//   * doubles: next_u64() >> 11, scaled by 2^-53, giving [0,1);
//   * bounded ints: rejection sampling on the high bits (unbiased);
//   * shuffles: Fisher-Yates from the back using bounded ints;
//   * per-purpose sub-streams: derive_seed(base, tag, index) hashes the
//     tag with FNV-1a (64-bit, offset 14695981039346656037, prime
//     1099511628211), XORs it into the base seed together with the index
//     scrambled by splitmix64, and finalizes with one more splitmix64
//     round. Distinct tags give statistically independent streams.

namespace certlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag,
                                 std::uint64_t index = 0) {
    std::uint64_t state = base ^ fnv1a64(tag);
    std::uint64_t mixed_index = index;
    state ^= splitmix64(mixed_index);
    return splitmix64(state);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
    }

    std::uint64_t next_u64() {
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

    // Uniform in [0,1).
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    bool chance(double p) { return next_double() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int n) {
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

}  // namespace certlab
