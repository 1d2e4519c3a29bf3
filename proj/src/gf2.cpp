#include "certlab/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "certlab/rng.hpp"

namespace certlab::gf2 {

namespace {

void check_equal_lengths(std::span<const Vec> vectors) {
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        if (vectors[i].length() != vectors[0].length())
            throw std::invalid_argument("gf2: mixed vector lengths");
    }
}

// Generic subset-scan circuit search shared by the Vec and word paths.
// `dependent(idx)` decides dependence of an index subset; subsets of each
// size are visited in lexicographic index-tuple order, so the first hit at
// the smallest size is the canonical circuit.
template <class DependentFn>
std::optional<std::vector<int>> scan_subsets(int count, int lo_size, int hi_size,
                                             DependentFn dependent) {
    std::vector<int> idx;
    for (int size = lo_size; size <= hi_size; ++size) {
        if (size > count) break;
        idx.assign(size, 0);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (dependent(idx)) return idx;
            // next combination in lexicographic order
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == count - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

int Vec::lowest_set_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

std::string Vec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const int bytes = (len_ + 7) / 8;
    std::string out;
    out.reserve(2 * bytes);
    for (int b = 0; b < bytes; ++b) {
        const unsigned byte = (words_[b / 8] >> ((b % 8) * 8)) & 0xff;
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

Vec Vec::from_hex(std::string_view hex, int length) {
    const int bytes = (length + 7) / 8;
    if (static_cast<int>(hex.size()) != 2 * bytes)
        throw std::invalid_argument("gf2: hex string has wrong length");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("gf2: bad hex digit");
    };
    Vec v(length);
    for (int b = 0; b < bytes; ++b) {
        const unsigned byte = (nibble(hex[2 * b]) << 4) | nibble(hex[2 * b + 1]);
        v.words_[b / 8] |= std::uint64_t{byte} << ((b % 8) * 8);
    }
    for (int i = length; i < 8 * bytes; ++i)
        if (v.get(i)) throw std::invalid_argument("gf2: hex has bits beyond length");
    return v;
}

int rank(std::span<const Vec> vectors) {
    check_equal_lengths(vectors);
    std::vector<Vec> basis;
    basis.reserve(vectors.size());
    for (const Vec& in : vectors) {
        Vec v = in;
        for (const Vec& p : basis) {
            if (v.get(p.lowest_set_bit())) v.xor_with(p);
        }
        if (!v.is_zero()) basis.push_back(std::move(v));
    }
    return static_cast<int>(basis.size());
}

int deficit(std::span<const Vec> vectors) {
    return static_cast<int>(vectors.size()) - rank(vectors);
}

int dup_count(std::span<const Vec> vectors) {
    check_equal_lengths(vectors);
    int dups = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (vectors[i] == vectors[j]) {
                ++dups;
                break;
            }
    return dups;
}

std::optional<Circuit> find_circuit(std::span<const Vec> vectors,
                                    std::optional<int> max_probe_size) {
    if (vectors.empty()) throw std::invalid_argument("gf2: find_circuit on empty list");
    check_equal_lengths(vectors);
    const int count = static_cast<int>(vectors.size());
    if (deficit(vectors) == 0) return std::nullopt;

    auto dependent = [&](const std::vector<int>& idx) {
        std::vector<Vec> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(vectors[i]);
        return rank(sub) < static_cast<int>(sub.size());
    };

    const bool full_search = count <= 7 || !max_probe_size.has_value();
    if (full_search) {
        auto found = scan_subsets(count, 1, count, dependent);
        return Circuit{*found, static_cast<int>(found->size())};
    }
    if (auto found = scan_subsets(count, 2, 4, dependent))
        return Circuit{*found, static_cast<int>(found->size())};
    Circuit all;
    all.indices.resize(count);
    for (int i = 0; i < count; ++i) all.indices[i] = i;
    all.size = count;
    return all;
}

Mat random_gl(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gf2: random_gl needs n >= 1");
    Rng rng(seed);
    for (;;) {
        Mat m;
        m.rows.reserve(n);
        for (int i = 0; i < n; ++i) {
            Vec row(n);
            for (int j = 0; j < n; ++j) row.set(j, rng.next_u64() & 1);
            m.rows.push_back(std::move(row));
        }
        if (rank(m.rows) == n) return m;
    }
}

int rank_words(std::span<const std::uint64_t> vectors) {
    std::uint64_t basis[64];
    int r = 0;
    for (std::uint64_t in : vectors) {
        std::uint64_t v = in;
        for (int b = 0; b < r; ++b) {
            const std::uint64_t lead = basis[b] & (~basis[b] + 1);
            if (v & lead) v ^= basis[b];
        }
        if (v) basis[r++] = v;
    }
    return r;
}

int deficit_words(std::span<const std::uint64_t> vectors) {
    return static_cast<int>(vectors.size()) - rank_words(vectors);
}

int dup_count_words(std::span<const std::uint64_t> vectors) {
    int dups = 0;
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (vectors[i] == vectors[j]) {
                ++dups;
                break;
            }
    return dups;
}

std::optional<Circuit> find_circuit_words(std::span<const std::uint64_t> vectors,
                                          std::optional<int> max_probe_size) {
    if (vectors.empty()) throw std::invalid_argument("gf2: find_circuit on empty list");
    const int count = static_cast<int>(vectors.size());
    if (deficit_words(vectors) == 0) return std::nullopt;

    std::uint64_t sub[64];
    auto dependent = [&](const std::vector<int>& idx) {
        for (std::size_t i = 0; i < idx.size(); ++i) sub[i] = vectors[idx[i]];
        return rank_words({sub, idx.size()}) < static_cast<int>(idx.size());
    };

    const bool full_search = count <= 7 || !max_probe_size.has_value();
    if (full_search) {
        auto found = scan_subsets(count, 1, count, dependent);
        return Circuit{*found, static_cast<int>(found->size())};
    }
    if (auto found = scan_subsets(count, 2, 4, dependent))
        return Circuit{*found, static_cast<int>(found->size())};
    Circuit all;
    all.indices.resize(count);
    for (int i = 0; i < count; ++i) all.indices[i] = i;
    all.size = count;
    return all;
}

}  // namespace certlab::gf2
