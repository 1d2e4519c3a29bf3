#include "certlab/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace certlab::graphs {

namespace {

// Colored-graph canonical labeling by iterated refinement and
// individualization. Vertices are branch targets in the first smallest
// non-singleton color cell; the answer is the lexicographically least
// encoding over all explored labelings.
struct Canonicalizer {
    int n;
    const std::vector<std::uint64_t>& adj;  // symmetric masks
    std::vector<std::uint8_t> best;
    bool have_best = false;

    Canonicalizer(int n_, const std::vector<std::uint64_t>& adj_) : n(n_), adj(adj_) {}

    // One refinement pass: new color = rank of (color, sorted neighbor
    // colors). Repeats until the color count stops growing.
    void refine(std::vector<int>& colors) const {
        int color_count = 1 + *std::max_element(colors.begin(), colors.end());
        for (;;) {
            std::vector<std::pair<std::vector<int>, int>> keyed(n);
            for (int v = 0; v < n; ++v) {
                std::vector<int> key;
                key.push_back(colors[v]);
                std::uint64_t nb = adj[v];
                while (nb) {
                    const int w = std::countr_zero(nb);
                    nb &= nb - 1;
                    key.push_back(colors[w]);
                }
                std::sort(key.begin() + 1, key.end());
                keyed[v] = {std::move(key), v};
            }
            std::map<std::vector<int>, int> renumber;
            for (const auto& [key, v] : keyed) renumber.emplace(key, 0);
            int next = 0;
            for (auto& [key, id] : renumber) id = next++;
            for (const auto& [key, v] : keyed) colors[v] = renumber[key];
            if (next == color_count) return;
            color_count = next;
        }
    }

    // First smallest non-singleton cell, or -1 when discrete.
    int pick_cell(const std::vector<int>& colors, std::vector<int>& members) const {
        std::map<int, std::vector<int>> cells;
        for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
        int best_color = -1;
        std::size_t best_size = 0;
        for (const auto& [color, vs] : cells) {
            if (vs.size() < 2) continue;
            if (best_color == -1 || vs.size() < best_size) {
                best_color = color;
                best_size = vs.size();
            }
        }
        if (best_color >= 0) members = cells[best_color];
        return best_color;
    }

    // Cells whose members all look alike (identical adjacency outside the
    // cell, empty or complete inside) are interchangeable by transposition
    // automorphisms, so one representative suffices.
    bool cell_uniform(const std::vector<int>& members) const {
        std::uint64_t cell_mask = 0;
        for (int v : members) cell_mask |= std::uint64_t{1} << v;
        const std::uint64_t outside0 = adj[members[0]] & ~cell_mask;
        bool complete = true, empty = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if ((adj[members[i]] & ~cell_mask) != outside0) return false;
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if ((adj[members[i]] >> members[j]) & 1)
                    empty = false;
                else
                    complete = false;
            }
        }
        return empty || complete;
    }

    void encode_leaf(const std::vector<int>& colors) {
        std::vector<int> pos(n);  // vertex -> canonical position
        for (int v = 0; v < n; ++v) pos[v] = colors[v];
        std::vector<int> at(n);  // canonical position -> vertex
        for (int v = 0; v < n; ++v) at[pos[v]] = v;
        std::vector<std::uint8_t> bytes((static_cast<std::size_t>(n) * n + 7) / 8, 0);
        std::size_t bit = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++bit)
                if ((adj[at[a]] >> at[b]) & 1) bytes[bit >> 3] |= 1u << (bit & 7);
        if (!have_best || bytes < best) {
            best = std::move(bytes);
            have_best = true;
        }
    }

    void search(std::vector<int> colors) {
        refine(colors);
        std::vector<int> members;
        const int cell = pick_cell(colors, members);
        if (cell < 0) {
            encode_leaf(colors);
            return;
        }
        const bool uniform = cell_uniform(members);
        for (int v : members) {
            std::vector<int> next(n);
            for (int w = 0; w < n; ++w) next[w] = 2 * colors[w] + (w == v ? 0 : 1);
            search(std::move(next));
            if (uniform) break;
        }
    }
};

std::vector<std::uint8_t> canonical_bytes(int n, const std::vector<std::uint64_t>& adj,
                                          std::vector<int> colors) {
    if (n == 0) return {};
    Canonicalizer c(n, adj);
    c.search(std::move(colors));
    return c.best;
}

// Bipartite incidence as a colored graph on u+v vertices; rows keep color 0
// and columns color 1, so refinement never merges the parts.
void bipartite_as_graph(const Bipartite& m, std::vector<std::uint64_t>& adj,
                        std::vector<int>& colors) {
    const int total = m.u + m.v;
    adj.assign(total, 0);
    colors.assign(total, 0);
    for (int c = 0; c < m.v; ++c) colors[m.u + c] = 1;
    for (int r = 0; r < m.u; ++r)
        for (int c = 0; c < m.v; ++c)
            if (m.get(r, c)) {
                adj[r] |= std::uint64_t{1} << (m.u + c);
                adj[m.u + c] |= std::uint64_t{1} << r;
            }
}

void append_int(std::vector<std::uint8_t>& out, int x) {
    out.push_back(static_cast<std::uint8_t>(x & 0xff));
    out.push_back(static_cast<std::uint8_t>((x >> 8) & 0xff));
}

// Backtracking matcher used by the isomorphic() overloads. Colors must be
// refinement-stable on both sides.
bool match(int n, const std::vector<std::uint64_t>& adj_g,
           const std::vector<std::uint64_t>& adj_h, const std::vector<int>& col_g,
           const std::vector<int>& col_h) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    // map rare colors first
    std::vector<int> color_size(n + 1, 0);
    for (int v = 0; v < n; ++v) ++color_size[col_g[v]];
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color_size[col_g[a]] != color_size[col_g[b]])
            return color_size[col_g[a]] < color_size[col_g[b]];
        return a < b;
    });

    std::vector<int> map_gh(n, -1);
    std::vector<bool> used(n, false);

    auto backtrack = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[depth];
        for (int w = 0; w < n; ++w) {
            if (used[w] || col_h[w] != col_g[v]) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                const int v2 = order[d];
                const bool eg = (adj_g[v] >> v2) & 1;
                const bool eh = (adj_h[w] >> map_gh[v2]) & 1;
                if (eg != eh) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_gh[v] = w;
            used[w] = true;
            if (self(self, depth + 1)) return true;
            used[w] = false;
            map_gh[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

bool refined_colors_compatible(int n, const std::vector<std::uint64_t>& adj_g,
                               const std::vector<std::uint64_t>& adj_h,
                               std::vector<int>& col_g, std::vector<int>& col_h) {
    Canonicalizer cg(n, adj_g), ch(n, adj_h);
    cg.refine(col_g);
    ch.refine(col_h);
    std::vector<int> hist_g(col_g), hist_h(col_h);
    std::sort(hist_g.begin(), hist_g.end());
    std::sort(hist_h.begin(), hist_h.end());
    return hist_g == hist_h;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    CanonicalForm f;
    f.bytes.push_back(0);  // payload tag
    append_int(f.bytes, g.n);
    auto body = canonical_bytes(g.n, g.adj, std::vector<int>(g.n, 0));
    f.bytes.insert(f.bytes.end(), body.begin(), body.end());
    return f;
}

CanonicalForm canonical_form(const Bipartite& m) {
    CanonicalForm f;
    f.bytes.push_back(1);
    append_int(f.bytes, m.u);
    append_int(f.bytes, m.v);
    std::vector<std::uint64_t> adj;
    std::vector<int> colors;
    bipartite_as_graph(m, adj, colors);
    auto body = canonical_bytes(m.u + m.v, adj, std::move(colors));
    f.bytes.insert(f.bytes.end(), body.begin(), body.end());
    return f;
}

CanonicalForm canonical_form(const Card& card) {
    CanonicalForm f;
    f.bytes.push_back(static_cast<std::uint8_t>(card.kind) + 16);
    CanonicalForm inner = card.kind == CardKind::VertexDeleted
                              ? canonical_form(card.graph())
                              : canonical_form(card.matrix());
    f.bytes.insert(f.bytes.end(), inner.bytes.begin(), inner.bytes.end());
    return f;
}

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n) return false;
    if (g.edge_count() != h.edge_count()) return false;
    std::vector<int> col_g(g.n, 0), col_h(h.n, 0);
    if (!refined_colors_compatible(g.n, g.adj, h.adj, col_g, col_h)) return false;
    return match(g.n, g.adj, h.adj, col_g, col_h);
}

bool isomorphic(const Bipartite& a, const Bipartite& b) {
    if (a.u != b.u || a.v != b.v) return false;
    if (a.ones_count() != b.ones_count()) return false;
    std::vector<std::uint64_t> adj_a, adj_b;
    std::vector<int> col_a, col_b;
    bipartite_as_graph(a, adj_a, col_a);
    bipartite_as_graph(b, adj_b, col_b);
    const int n = a.u + a.v;
    if (!refined_colors_compatible(n, adj_a, adj_b, col_a, col_b)) return false;
    return match(n, adj_a, adj_b, col_a, col_b);
}

std::vector<CanonicalForm> deck_canonical_forms(const Deck& deck) {
    std::vector<CanonicalForm> forms;
    forms.reserve(deck.cards.size());
    for (const Card& c : deck.cards) forms.push_back(canonical_form(c));
    std::sort(forms.begin(), forms.end());
    return forms;
}

bool exact_deck_equal(const Deck& d1, const Deck& d2) {
    if (d1.bipartite != d2.bipartite || d1.declared_vertices() != d2.declared_vertices() ||
        (d1.bipartite && (d1.u != d2.u || d1.v != d2.v)))
        throw std::invalid_argument("exact_deck_equal: declared sizes differ");
    if (d1.cards.size() != d2.cards.size()) return false;
    return deck_canonical_forms(d1) == deck_canonical_forms(d2);
}

}  // namespace certlab::graphs
