#pragma once

// Brute-force oracles used to pin expected values. Everything here is
// deliberately independent of the library's implementation paths: rank is
// computed by counting the span, isomorphism by trying all vertex maps,
// permutation signs by counting inversions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "certlab/gf2.hpp"
#include "certlab/graphs.hpp"

namespace oracles {

// Rank as log2 of the span size.
inline int rank_by_span(const std::vector<certlab::gf2::Vec>& vectors) {
    std::set<std::vector<std::uint64_t>> span;
    span.insert(std::vector<std::uint64_t>(
        vectors.empty() ? 0 : vectors[0].words().size(), 0));
    for (const auto& v : vectors) {
        std::set<std::vector<std::uint64_t>> next = span;
        for (const auto& s : span) {
            std::vector<std::uint64_t> x = s;
            for (std::size_t w = 0; w < x.size(); ++w) x[w] ^= v.words()[w];
            next.insert(x);
        }
        span = std::move(next);
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

inline bool dependent_by_span(const std::vector<certlab::gf2::Vec>& vectors) {
    return rank_by_span(vectors) < static_cast<int>(vectors.size());
}

// Minimum dependent subset, smallest size first, lexicographic index tuple
// within a size; search by explicit subset masks.
inline std::optional<std::vector<int>> min_circuit(const std::vector<certlab::gf2::Vec>& vec) {
    const int k = static_cast<int>(vec.size());
    if (!dependent_by_span(vec)) return std::nullopt;
    std::vector<std::vector<int>> hits;
    for (int size = 1; size <= k; ++size) {
        hits.clear();
        std::vector<int> idx(size);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<certlab::gf2::Vec> sub;
            for (int i : idx) sub.push_back(vec[i]);
            if (dependent_by_span(sub)) hits.push_back(idx);
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == k - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (!hits.empty()) return *std::min_element(hits.begin(), hits.end());
    }
    return std::nullopt;
}

// Isomorphism by trying every vertex bijection (n <= 8).
inline bool isomorphic_by_all_maps(const certlab::graphs::Graph& g,
                                   const certlab::graphs::Graph& h) {
    if (g.n != h.n) return false;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int a = 0; a < g.n && ok; ++a)
            for (int b = a + 1; b < g.n && ok; ++b)
                if (g.has_edge(a, b) != h.has_edge(perm[a], perm[b])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Part-respecting isomorphism for incidence matrices (u!, v! maps).
inline bool bipartite_isomorphic_by_all_maps(const certlab::graphs::Bipartite& a,
                                             const certlab::graphs::Bipartite& b) {
    if (a.u != b.u || a.v != b.v) return false;
    std::vector<int> rp(a.u), cp(a.v);
    std::iota(rp.begin(), rp.end(), 0);
    do {
        std::iota(cp.begin(), cp.end(), 0);
        do {
            bool ok = true;
            for (int r = 0; r < a.u && ok; ++r)
                for (int c = 0; c < a.v && ok; ++c)
                    if (a.get(r, c) != b.get(rp[r], cp[c])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
    return false;
}

// Triangles by enumerating all 3-subsets.
inline long long triangles_by_triples(const certlab::graphs::Graph& g) {
    long long t = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) ++t;
    return t;
}

// Permutation sign by counting inversions.
inline int sign_by_inversions(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace oracles
