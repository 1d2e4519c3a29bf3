#include "certlab/graphs.hpp"

#include <bit>
#include <stdexcept>

#include "certlab/errors.hpp"
#include "certlab/rng.hpp"

namespace certlab::graphs {

int Graph::degree(int v) const { return std::popcount(adj[v]); }

int Graph::edge_count() const {
    int twice = 0;
    for (int i = 0; i < n; ++i) twice += degree(i);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

Graph Graph::without_vertex(int v) const {
    Graph g(n - 1);
    for (int a = 0; a < n; ++a) {
        if (a == v) continue;
        const int a2 = a < v ? a : a - 1;
        for (int b = a + 1; b < n; ++b) {
            if (b == v || !has_edge(a, b)) continue;
            const int b2 = b < v ? b : b - 1;
            g.add_edge(a2, b2);
        }
    }
    return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (has_edge(a, b)) g.add_edge(perm[a], perm[b]);
    return g;
}

int Bipartite::row_degree(int r) const { return std::popcount(rows[r]); }

int Bipartite::col_degree(int c) const {
    int d = 0;
    for (int r = 0; r < u; ++r) d += get(r, c);
    return d;
}

int Bipartite::ones_count() const {
    int total = 0;
    for (int r = 0; r < u; ++r) total += row_degree(r);
    return total;
}

Bipartite Bipartite::without_row(int r) const {
    Bipartite m(u - 1, v);
    for (int i = 0, out = 0; i < u; ++i) {
        if (i == r) continue;
        m.rows[out++] = rows[i];
    }
    return m;
}

Bipartite Bipartite::without_col(int c) const {
    Bipartite m(u, v - 1);
    const std::uint64_t low = (std::uint64_t{1} << c) - 1;
    for (int i = 0; i < u; ++i)
        m.rows[i] = (rows[i] & low) | ((rows[i] >> (c + 1)) << c);
    return m;
}

Bipartite Bipartite::permuted(std::span<const int> row_perm,
                              std::span<const int> col_perm) const {
    Bipartite m(u, v);
    for (int r = 0; r < u; ++r)
        for (int c = 0; c < v; ++c)
            if (get(r, c)) m.set(row_perm[r], col_perm[c], true);
    return m;
}

Deck make_deck(const Graph& g) {
    if (g.n < 2) throw std::invalid_argument("make_deck: graph needs n >= 2");
    Deck d;
    d.bipartite = false;
    d.n = g.n;
    d.cards.reserve(g.n);
    for (int v = 0; v < g.n; ++v)
        d.cards.push_back(Card{CardKind::VertexDeleted, g.without_vertex(v)});
    return d;
}

Deck make_deck(const Bipartite& m) {
    if (m.u < 1 || m.v < 1) throw std::invalid_argument("make_deck: needs u,v >= 1");
    Deck d;
    d.bipartite = true;
    d.u = m.u;
    d.v = m.v;
    d.cards.reserve(m.u + m.v);
    for (int r = 0; r < m.u; ++r)
        d.cards.push_back(Card{CardKind::RowDeleted, m.without_row(r)});
    for (int c = 0; c < m.v; ++c)
        d.cards.push_back(Card{CardKind::ColDeleted, m.without_col(c)});
    return d;
}

Card scramble(const Card& card, std::uint64_t seed) {
    Rng rng(seed);
    if (card.kind == CardKind::VertexDeleted) {
        const Graph& g = card.graph();
        return Card{card.kind, g.permuted(rng.permutation(g.n))};
    }
    const Bipartite& m = card.matrix();
    auto row_perm = rng.permutation(m.u);
    auto col_perm = rng.permutation(m.v);
    return Card{card.kind, m.permuted(row_perm, col_perm)};
}

Deck scramble_deck(const Deck& deck, std::uint64_t seed) {
    Deck out = deck;
    for (std::size_t t = 0; t < out.cards.size(); ++t)
        out.cards[t] = scramble(out.cards[t], derive_seed(seed, "card", t));
    Rng order(derive_seed(seed, "card-order"));
    order.shuffle(out.cards);
    return out;
}

int card_edge_count(const Card& card) {
    if (card.kind == CardKind::VertexDeleted) return card.graph().edge_count();
    return card.matrix().ones_count();
}

int kelly_edge_count(const Deck& deck) {
    const int n = deck.declared_vertices();
    if (n < 3) throw std::invalid_argument("kelly_edge_count: needs >= 3 vertices");
    long long total = 0;
    for (const Card& c : deck.cards) total += card_edge_count(c);
    if (total % (n - 2) != 0)
        throw MalformedDeckError("kelly_edge_count: card edge sum not divisible by n-2");
    return static_cast<int>(total / (n - 2));
}

std::vector<int> degrees_from_deck(const Deck& deck) {
    const int m = kelly_edge_count(deck);
    std::vector<int> degs;
    degs.reserve(deck.cards.size());
    for (const Card& c : deck.cards) degs.push_back(m - card_edge_count(c));
    return degs;
}

long long triangle_count(const Graph& g) {
    long long total = 0;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (g.has_edge(a, b))
                total += std::popcount(g.adj[a] & g.adj[b] & ~((std::uint64_t{2} << b) - 1));
    return total;
}

long long kelly_triangle_count(const Deck& deck) {
    if (deck.bipartite)
        throw std::invalid_argument("kelly_triangle_count: graph decks only");
    if (deck.n < 4) throw std::invalid_argument("kelly_triangle_count: needs n >= 4");
    long long total = 0;
    for (const Card& c : deck.cards) total += triangle_count(c.graph());
    if (total % (deck.n - 3) != 0)
        throw MalformedDeckError("kelly_triangle_count: triangle sum not divisible by n-3");
    return total / (deck.n - 3);
}

}  // namespace certlab::graphs
