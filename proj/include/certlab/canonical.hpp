#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "certlab/graphs.hpp"

namespace certlab::graphs {

// Opaque canonical label: equal bytes iff isomorphic. The bipartite
// variant respects the bipartition as a vertex 2-coloring (rows never map
// to columns).
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Bipartite& m);
CanonicalForm canonical_form(const Card& card);

// Exact isomorphism decision by color refinement plus backtracking search.
// Deliberately independent of canonical_form; the two are cross-checked in
// tests.
bool isomorphic(const Graph& g, const Graph& h);
bool isomorphic(const Bipartite& a, const Bipartite& b);

// True iff the multisets of card canonical forms coincide. Throws
// std::invalid_argument when declared sizes differ.
bool exact_deck_equal(const Deck& d1, const Deck& d2);

// Sorted card canonical forms, cached by callers that compare one deck
// against many candidates.
std::vector<CanonicalForm> deck_canonical_forms(const Deck& deck);

}  // namespace certlab::graphs
