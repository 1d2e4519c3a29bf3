#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "certlab/graphs.hpp"

namespace certlab::graphs {

// Refinement signature of an incidence matrix, invariant under independent
// row and column permutations. Colors are 64-bit hashes of a fixed mixing
// function, so signatures are stable across runs and platforms; collisions
// are tolerable because signatures only feed heuristic costs, never
// correctness gates.
struct WlSignature {
    std::vector<std::uint64_t> row_colors;  // sorted
    std::vector<std::uint64_t> col_colors;  // sorted
    int rows = 0, cols = 0;

    auto operator<=>(const WlSignature&) const = default;
};

// Initial colors are 7-tuples per node: degree, neighbor degree sum and sum
// of squares, second-neighborhood sum and sum of squares, third-neighborhood
// sum, count of distinct neighbor degrees. Then `steps` rounds hash each
// node's color together with the sorted multiset of its neighbors' colors.
WlSignature wl_signature(const Bipartite& m, int steps = 3);

// The mixing function behind WL colors, exposed for reuse.
std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x);

}  // namespace certlab::graphs
