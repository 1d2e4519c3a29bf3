#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace certlab::gf2 {

// Bit-packed vector over GF(2). Bit index space is exactly [0, length);
// equality is bitwise. Immutable in spirit: operations return new values.
class Vec {
  public:
    Vec() = default;
    explicit Vec(int length) : len_(length), words_((length + 63) / 64, 0) {}

    static Vec basis(int length, int i) {
        Vec v(length);
        v.set(i, true);
        return v;
    }

    int length() const { return len_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(int i, bool b) {
        if (b)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void xor_with(const Vec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int lowest_set_bit() const;  // -1 when zero

    std::span<const std::uint64_t> words() const { return words_; }

    // Single-word view; valid only for length <= 64.
    std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }

    bool operator==(const Vec& o) const = default;
    auto operator<=>(const Vec& o) const = default;

    // Little-endian hex bit string: byte k holds bits 8k..8k+7 (LSB first),
    // two lowercase hex digits per byte, ceil(length/8) bytes.
    std::string to_hex() const;
    static Vec from_hex(std::string_view hex, int length);

  private:
    int len_ = 0;
    std::vector<std::uint64_t> words_;
};

// Row-list matrix; all rows share one length.
struct Mat {
    std::vector<Vec> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const { return rows.empty() ? 0 : rows[0].length(); }
};

// Dimension of the GF(2) span, by Gaussian elimination.
// Throws std::invalid_argument on mixed lengths.
int rank(std::span<const Vec> vectors);

// |vectors| - rank(vectors).
int deficit(std::span<const Vec> vectors);

// Number of elements whose exact bit value already occurred earlier in
// list order.
int dup_count(std::span<const Vec> vectors);

struct Circuit {
    std::vector<int> indices;  // ascending
    int size = 0;              // == indices.size()
};

// Minimal dependent subset search.
//
// Independent input -> nullopt. Otherwise:
//   * full mode (|vectors| <= 7, or max_probe_size absent): the
//     minimum-cardinality dependent index subset, ties broken by the
//     lexicographically smallest index tuple;
//   * probe mode (max_probe_size given and |vectors| > 7): only subset
//     sizes 2, 3, 4 are searched; if none is dependent the whole index
//     set is returned, so the reported size is an upper bound.
std::optional<Circuit> find_circuit(std::span<const Vec> vectors,
                                    std::optional<int> max_probe_size = std::nullopt);

// Random invertible n x n matrix, deterministic in the seed
// (rejection-samples uniform matrices until full rank).
Mat random_gl(int n, std::uint64_t seed);

// ---- single-word fast path (length <= 64), used by hot loops ----
// Semantics match the Vec overloads exactly; vectors are the low bits of
// each word.

int rank_words(std::span<const std::uint64_t> vectors);
int deficit_words(std::span<const std::uint64_t> vectors);
int dup_count_words(std::span<const std::uint64_t> vectors);
std::optional<Circuit> find_circuit_words(std::span<const std::uint64_t> vectors,
                                          std::optional<int> max_probe_size = std::nullopt);

}  // namespace certlab::gf2
