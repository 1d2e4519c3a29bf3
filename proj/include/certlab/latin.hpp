#pragma once

#include <cstdint>
#include <vector>

namespace certlab::latin {

// Order-n Latin square over symbols [0, n); every row and column is a
// permutation of the symbols.
struct LatinSquare {
    int n = 0;
    std::vector<std::uint8_t> cells;  // row-major

    LatinSquare() = default;
    explicit LatinSquare(int n_) : n(n_), cells(static_cast<std::size_t>(n_) * n_, 0) {}

    int at(int r, int c) const { return cells[static_cast<std::size_t>(r) * n + c]; }
    void put(int r, int c, int s) {
        cells[static_cast<std::size_t>(r) * n + c] = static_cast<std::uint8_t>(s);
    }

    bool valid() const;
    bool operator==(const LatinSquare&) const = default;
};

// The square with L[r][c] = (r + c) mod n.
LatinSquare cyclic_square(int n);

// Product of the signs of all n row permutations and all n column
// permutations. Throws std::invalid_argument on invalid squares.
int sign(const LatinSquare& l);

// All Latin squares of order n by backtracking; n <= 4 (guard against the
// combinatorial blowup at larger orders).
std::vector<LatinSquare> enumerate_latin(int n);

enum class LineMode { Row, Col, Symbol };

// The permutation aligning equal symbols across two parallel lines. Row
// mode sends column c to the column of row i2 holding L[i1][c]; column
// mode plays the same game on rows; symbol mode works in the conjugate
// array whose (s, c) entry is the row containing symbol s in column c.
struct MatchingPermutation {
    LineMode mode;
    int i1 = 0, i2 = 0;
    std::vector<int> perm;
};

MatchingPermutation matching_permutation(const LatinSquare& l, LineMode mode, int i1, int i2);

// All cycles of length >= 2, each rotated so its minimum element leads,
// sorted by (length, elements).
std::vector<std::vector<int>> cycles_of(const MatchingPermutation& mp);

// The odd cycles among cycles_of (length >= 3; fixed points cannot occur).
std::vector<std::vector<int>> odd_cycles(const MatchingPermutation& mp);

// Two-line trade supported on a union of matching-permutation cycles.
struct CycleTrade {
    LineMode mode;
    int i1 = 0, i2 = 0;
    std::vector<int> support;
};

// Swaps the two lines on the support (symbol mode swaps the two symbols'
// positions within the supported columns). Self-inverse; throws
// InvalidTradeError when the support is not cycle-closed.
LatinSquare apply_trade(const LatinSquare& l, const CycleTrade& t);

struct Isotopy {
    std::vector<int> row_perm, col_perm, sym_perm;
};

// L'[row_perm[r]][col_perm[c]] = sym_perm[L[r][c]].
LatinSquare apply_isotopy(const LatinSquare& l, const Isotopy& iso);

Isotopy inverse(const Isotopy& iso);

// Lexicographic minimum between the min-rotation of the cycle and the
// min-rotation of its reversal anchored at the same head; stable under
// cycle reversal, which keeps repeated selections consistent.
std::vector<int> canonical_cycle(std::vector<int> cycle);
std::vector<int> stabilized_canonical_cycle(std::vector<int> cycle);

// Test-set generator: walk from the cyclic square by 50n random single
// cycle trades, then one random isotopy. Deterministic in the seed;
// documented as non-uniform.
LatinSquare random_square(int n, std::uint64_t seed);

Isotopy random_isotopy(int n, std::uint64_t seed);

}  // namespace certlab::latin
