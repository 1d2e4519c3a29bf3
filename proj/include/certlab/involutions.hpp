#pragma once

#include <cstdint>
#include <vector>

#include "certlab/latin.hpp"

namespace certlab::invol {

enum class MoveKind {
    Trade,             // a cycle trade applied in place
    ConjugatedTrade,   // trade applied inside a transposition conjugate
    SymbolSwapFallback,
    RowSymbolConjugationFallback,
    RowSwapFallback,
};

struct InvolutionOutcome {
    latin::LatinSquare output;
    MoveKind kind;
    int support_size = 0;  // Hamming distance between the grids
};

// Count of cells where the grids differ. Throws std::invalid_argument on
// order mismatch.
int support_size(const latin::LatinSquare& a, const latin::LatinSquare& b);

// One candidate two-line trade of the scan sequence.
struct TradeCandidate {
    latin::LineMode mode;  // Row or Col
    int i1 = 0, i2 = 0;
    bool sabotage = false;  // even-cycle trade behind the rarity filter
};

// The fixed scan order of candidate trades: two sabotage row pairs drawn
// from a random permutation (orders n > 8 only), the stride row pairs
// (i, i+n/2), 50 random row matchings, then the same for columns. A
// deterministic function of (n, seed, sabotage).
struct TradeSequenceSpec {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<TradeCandidate> entries;

    static TradeSequenceSpec generate(int n, std::uint64_t seed, bool sabotage);
};

struct Experiment1Options {
    bool sabotage = true;           // rare sign-preserving even-cycle moves
    std::uint64_t sequence_seed = 42;  // seed of the fixed scan sequence
};

// Scans the trade sequence; flip entries take the first odd cycle plus
// optionally the first even cycle, sabotage entries take the first even
// cycle when sum x(x+13) over the cycle is divisible by 20. A trade is
// applied only when no earlier entry fires on the tentative output.
// Fallback: symbol swap 0<->1 when n/2 is odd, row-symbol conjugation when
// n/2 is even. Even orders only.
InvolutionOutcome experiment1_map(const latin::LatinSquare& l,
                                  const Experiment1Options& opts = {});

// Tries conjugate views (row, column, symbol) and pairing families
// (adjacent, half-shifted, flattened 1-factorization, exhaustive) in
// order; applies the smallest-key odd-cycle trade found in the first
// productive combination. Fallback swaps rows 0 and 1.
InvolutionOutcome experiment2_map(const latin::LatinSquare& l);

// Tiered stable-trade cascade: adjacent row pairs, adjacent column pairs
// that do not create a row trade, then a global minimal-key search with
// stability and canonicality checks. When no stable trade exists the map
// conjugates by row transpositions, then column transpositions, accepting
// only when no simpler tier fires on the candidate output. Final fallback
// swaps symbols 0 and 1.
InvolutionOutcome experiment3_map(const latin::LatinSquare& l);

}  // namespace certlab::invol
