#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace certlab::graphs {

// Simple undirected graph on n <= 64 vertices, adjacency stored as one
// bitmask per vertex. Symmetric, zero diagonal, entries in {0,1}.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_, 0) {}

    bool has_edge(int a, int b) const { return (adj[a] >> b) & 1; }
    void add_edge(int a, int b) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
    }
    void remove_edge(int a, int b) {
        adj[a] &= ~(std::uint64_t{1} << b);
        adj[b] &= ~(std::uint64_t{1} << a);
    }
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph without_vertex(int v) const;
    Graph permuted(std::span<const int> perm) const;  // vertex i -> perm[i]

    bool operator==(const Graph&) const = default;
};

// 0-1 incidence matrix of a bipartite graph, one bitmask of column bits
// per row. v <= 64.
struct Bipartite {
    int u = 0, v = 0;
    std::vector<std::uint64_t> rows;

    Bipartite() = default;
    Bipartite(int u_, int v_) : u(u_), v(v_), rows(u_, 0) {}

    bool get(int r, int c) const { return (rows[r] >> c) & 1; }
    void set(int r, int c, bool b) {
        if (b)
            rows[r] |= std::uint64_t{1} << c;
        else
            rows[r] &= ~(std::uint64_t{1} << c);
    }
    int row_degree(int r) const;
    int col_degree(int c) const;
    int ones_count() const;

    Bipartite without_row(int r) const;
    Bipartite without_col(int c) const;
    // row r -> row_perm[r], column c -> col_perm[c]
    Bipartite permuted(std::span<const int> row_perm, std::span<const int> col_perm) const;

    bool operator==(const Bipartite&) const = default;
};

enum class CardKind { VertexDeleted, RowDeleted, ColDeleted };

struct Card {
    CardKind kind;
    std::variant<Graph, Bipartite> payload;

    const Graph& graph() const { return std::get<Graph>(payload); }
    const Bipartite& matrix() const { return std::get<Bipartite>(payload); }
};

// Multiset of one-vertex-deleted cards plus the declared sizes of the
// original object. Card order carries no meaning.
struct Deck {
    bool bipartite = false;
    int n = 0;       // graph model
    int u = 0, v = 0;  // matrix model
    std::vector<Card> cards;

    int card_count() const { return static_cast<int>(cards.size()); }
    int declared_vertices() const { return bipartite ? u + v : n; }
};

Deck make_deck(const Graph& g);       // requires n >= 2
Deck make_deck(const Bipartite& m);   // requires u >= 1 and v >= 1

// Relabels one card by a seed-deterministic uniform permutation; matrix
// cards get independent row and column permutations.
Card scramble(const Card& card, std::uint64_t seed);

// Independently relabels every card (seeds derived per card) and shuffles
// card order.
Deck scramble_deck(const Deck& deck, std::uint64_t seed);

// m = (sum of card edge counts) / (n - 2); throws MalformedDeckError when
// the sum does not divide. Requires at least 3 declared vertices.
int kelly_edge_count(const Deck& deck);

// Degree of the deleted vertex of card t: m - edges(card t). One entry per
// card, in card order.
std::vector<int> degrees_from_deck(const Deck& deck);

long long triangle_count(const Graph& g);

// T(G) = sum_v T(G - v) / (n - 3); graph decks only, n >= 4.
long long kelly_triangle_count(const Deck& deck);

int card_edge_count(const Card& card);

}  // namespace certlab::graphs
