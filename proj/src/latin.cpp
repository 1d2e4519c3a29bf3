#include "certlab/latin.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "certlab/errors.hpp"
#include "certlab/rng.hpp"

namespace certlab::latin {

namespace {

int permutation_sign(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    int transpositions = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

void check_valid(const LatinSquare& l, const char* who) {
    if (!l.valid()) throw std::invalid_argument(std::string(who) + ": invalid Latin square");
}

}  // namespace

bool LatinSquare::valid() const {
    if (n == 0) return false;
    std::vector<bool> seen(n);
    for (int r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), false);
        for (int c = 0; c < n; ++c) {
            const int s = at(r, c);
            if (s < 0 || s >= n || seen[s]) return false;
            seen[s] = true;
        }
    }
    for (int c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), false);
        for (int r = 0; r < n; ++r) {
            const int s = at(r, c);
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    return true;
}

LatinSquare cyclic_square(int n) {
    LatinSquare l(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) l.put(r, c, (r + c) % n);
    return l;
}

int sign(const LatinSquare& l) {
    check_valid(l, "sign");
    int s = 1;
    std::vector<int> perm(l.n);
    for (int r = 0; r < l.n; ++r) {
        for (int c = 0; c < l.n; ++c) perm[c] = l.at(r, c);
        s *= permutation_sign(perm);
    }
    for (int c = 0; c < l.n; ++c) {
        for (int r = 0; r < l.n; ++r) perm[r] = l.at(r, c);
        s *= permutation_sign(perm);
    }
    return s;
}

std::vector<LatinSquare> enumerate_latin(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("enumerate_latin: only n <= 4 is supported");
    std::vector<LatinSquare> out;
    LatinSquare l(n);
    std::vector<std::uint32_t> row_used(n, 0), col_used(n, 0);

    auto fill = [&](auto&& self, int cell) -> void {
        if (cell == n * n) {
            out.push_back(l);
            return;
        }
        const int r = cell / n, c = cell % n;
        for (int s = 0; s < n; ++s) {
            const std::uint32_t bit = 1u << s;
            if ((row_used[r] & bit) || (col_used[c] & bit)) continue;
            row_used[r] |= bit;
            col_used[c] |= bit;
            l.put(r, c, s);
            self(self, cell + 1);
            row_used[r] &= ~bit;
            col_used[c] &= ~bit;
        }
    };
    fill(fill, 0);
    return out;
}

MatchingPermutation matching_permutation(const LatinSquare& l, LineMode mode, int i1, int i2) {
    if (i1 == i2) throw std::invalid_argument("matching_permutation: equal line indices");
    const int n = l.n;
    MatchingPermutation mp{mode, i1, i2, std::vector<int>(n)};
    switch (mode) {
        case LineMode::Row: {
            std::vector<int> where(n);  // symbol -> column in row i2
            for (int c = 0; c < n; ++c) where[l.at(i2, c)] = c;
            for (int c = 0; c < n; ++c) mp.perm[c] = where[l.at(i1, c)];
            break;
        }
        case LineMode::Col: {
            std::vector<int> where(n);  // symbol -> row in column i2
            for (int r = 0; r < n; ++r) where[l.at(r, i2)] = r;
            for (int r = 0; r < n; ++r) mp.perm[r] = where[l.at(r, i1)];
            break;
        }
        case LineMode::Symbol: {
            // conjugate array: entry (s, c) is the row containing s in column c
            std::vector<int> row_of_1(n), row_of_2(n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    if (l.at(r, c) == i1) row_of_1[c] = r;
                    if (l.at(r, c) == i2) row_of_2[c] = r;
                }
            std::vector<int> where(n);  // row -> column where symbol i2 sits in that row
            for (int c = 0; c < n; ++c) where[row_of_2[c]] = c;
            for (int c = 0; c < n; ++c) mp.perm[c] = where[row_of_1[c]];
            break;
        }
    }
    return mp;
}

std::vector<std::vector<int>> cycles_of(const MatchingPermutation& mp) {
    const int n = static_cast<int>(mp.perm.size());
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int j = i; !seen[j]; j = mp.perm[j]) {
            seen[j] = true;
            cyc.push_back(j);
        }
        if (cyc.size() >= 2) cycles.push_back(std::move(cyc));
    }
    // starting each walk at the smallest unseen index already puts the
    // minimum first
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return cycles;
}

std::vector<std::vector<int>> odd_cycles(const MatchingPermutation& mp) {
    auto all = cycles_of(mp);
    std::erase_if(all, [](const auto& c) { return c.size() % 2 == 0; });
    return all;
}

LatinSquare apply_trade(const LatinSquare& l, const CycleTrade& t) {
    const auto mp = matching_permutation(l, t.mode, t.i1, t.i2);
    std::vector<bool> in_support(l.n, false);
    for (int x : t.support) {
        if (x < 0 || x >= l.n || in_support[x])
            throw InvalidTradeError("apply_trade: bad support element");
        in_support[x] = true;
    }
    for (int x : t.support)
        if (!in_support[mp.perm[x]])
            throw InvalidTradeError("apply_trade: support not closed under matching permutation");

    LatinSquare out = l;
    switch (t.mode) {
        case LineMode::Row:
            for (int c : t.support) {
                out.put(t.i1, c, l.at(t.i2, c));
                out.put(t.i2, c, l.at(t.i1, c));
            }
            break;
        case LineMode::Col:
            for (int r : t.support) {
                out.put(r, t.i1, l.at(r, t.i2));
                out.put(r, t.i2, l.at(r, t.i1));
            }
            break;
        case LineMode::Symbol:
            for (int c : t.support) {
                int r1 = -1, r2 = -1;
                for (int r = 0; r < l.n; ++r) {
                    if (l.at(r, c) == t.i1) r1 = r;
                    if (l.at(r, c) == t.i2) r2 = r;
                }
                out.put(r1, c, t.i2);
                out.put(r2, c, t.i1);
            }
            break;
    }
    assert(out.valid());
    return out;
}

LatinSquare apply_isotopy(const LatinSquare& l, const Isotopy& iso) {
    LatinSquare out(l.n);
    for (int r = 0; r < l.n; ++r)
        for (int c = 0; c < l.n; ++c)
            out.put(iso.row_perm[r], iso.col_perm[c], iso.sym_perm[l.at(r, c)]);
    assert(out.valid());
    return out;
}

Isotopy inverse(const Isotopy& iso) {
    const int n = static_cast<int>(iso.row_perm.size());
    Isotopy inv{std::vector<int>(n), std::vector<int>(n), std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
        inv.row_perm[iso.row_perm[i]] = i;
        inv.col_perm[iso.col_perm[i]] = i;
        inv.sym_perm[iso.sym_perm[i]] = i;
    }
    return inv;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    const auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

std::vector<int> stabilized_canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty()) return cycle;
    auto c1 = canonical_cycle(std::move(cycle));
    if (c1.size() <= 2) return c1;
    std::vector<int> rev;
    rev.reserve(c1.size());
    rev.push_back(c1[0]);
    rev.insert(rev.end(), c1.rbegin(), c1.rend() - 1);
    auto c2 = canonical_cycle(std::move(rev));
    return std::min(c1, c2);
}

LatinSquare random_square(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_square: n must be >= 1");
    LatinSquare l = cyclic_square(n);
    if (n == 1) return l;
    Rng rng(derive_seed(seed, "latin-walk"));
    for (int step = 0; step < 50 * n; ++step) {
        const auto mode = static_cast<LineMode>(rng.below(3));
        const int i1 = static_cast<int>(rng.below(n));
        int i2 = static_cast<int>(rng.below(n - 1));
        if (i2 >= i1) ++i2;
        const auto mp = matching_permutation(l, mode, i1, i2);
        const auto cycles = cycles_of(mp);
        const auto& support = cycles[rng.below(cycles.size())];
        l = apply_trade(l, CycleTrade{mode, i1, i2, support});
    }
    return apply_isotopy(l, random_isotopy(n, derive_seed(seed, "latin-walk-isotopy")));
}

Isotopy random_isotopy(int n, std::uint64_t seed) {
    Rng rng(seed);
    return Isotopy{rng.permutation(n), rng.permutation(n), rng.permutation(n)};
}

}  // namespace certlab::latin
