#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certlab/canonical.hpp"
#include "certlab/graphs.hpp"
#include "certlab/rng.hpp"
#include "oracles.hpp"

using namespace certlab;
using namespace certlab::graphs;

namespace {

Graph random_graph(Rng& rng, int n, double p) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.next_double() < p) g.add_edge(a, b);
    return g;
}

Bipartite random_bip(Rng& rng, int u, int v, double p) {
    Bipartite m(u, v);
    for (int r = 0; r < u; ++r)
        for (int c = 0; c < v; ++c)
            if (rng.next_double() < p) m.set(r, c, true);
    return m;
}

Graph p4() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    return g;
}

Graph star13() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(0, 3);
    return g;
}

}  // namespace

TEST_CASE("canonical form is permutation invariant") {
    Rng rng(42);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(9));
        Graph g = random_graph(rng, n, rng.uniform(0.0, 1.0));
        Graph h = g.permuted(rng.permutation(n));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(g, h));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs (vs brute force)") {
    CHECK_FALSE(isomorphic(p4(), star13()));
    CHECK(canonical_form(p4()) != canonical_form(star13()));

    Rng rng(4242);
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 2 + static_cast<int>(rng.below(6));  // brute force needs n <= 7
        Graph g = random_graph(rng, n, rng.uniform(0.2, 0.8));
        Graph h = random_graph(rng, n, rng.uniform(0.2, 0.8));
        const bool brute = oracles::isomorphic_by_all_maps(g, h);
        CHECK(isomorphic(g, h) == brute);
        CHECK((canonical_form(g) == canonical_form(h)) == brute);
    }
}

TEST_CASE("canonical form handles highly symmetric graphs") {
    Graph empty(12);
    Graph empty2 = empty;
    CHECK(canonical_form(empty) == canonical_form(empty2));
    Graph complete(10);
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) complete.add_edge(a, b);
    Rng rng(5);
    auto perm = rng.permutation(10);
    CHECK(canonical_form(complete) == canonical_form(complete.permuted(perm)));

    // two disjoint 6-cycles vs one 12-cycle: same degrees, not isomorphic
    Graph two_c6(12), c12(12);
    for (int i = 0; i < 6; ++i) {
        two_c6.add_edge(i, (i + 1) % 6);
        two_c6.add_edge(6 + i, 6 + (i + 1) % 6);
    }
    for (int i = 0; i < 12; ++i) c12.add_edge(i, (i + 1) % 12);
    CHECK(canonical_form(two_c6) != canonical_form(c12));
    CHECK_FALSE(isomorphic(two_c6, c12));
}

TEST_CASE("bipartite canonical form never maps across parts") {
    Rng rng(910);
    for (int iter = 0; iter < 200; ++iter) {
        const int u = 1 + static_cast<int>(rng.below(4));
        const int v = 1 + static_cast<int>(rng.below(4));
        Bipartite a = random_bip(rng, u, v, rng.uniform(0.2, 0.8));
        Bipartite b = a.permuted(rng.permutation(u), rng.permutation(v));
        CHECK(canonical_form(a) == canonical_form(b));
        CHECK(isomorphic(a, b));

        Bipartite c = random_bip(rng, u, v, rng.uniform(0.2, 0.8));
        const bool brute = oracles::bipartite_isomorphic_by_all_maps(a, c);
        CHECK(isomorphic(a, c) == brute);
        CHECK((canonical_form(a) == canonical_form(c)) == brute);
    }

    // 2x1 all-ones vs its transpose live in different spaces
    Bipartite tall(2, 1);
    tall.set(0, 0, true);
    tall.set(1, 0, true);
    Bipartite wide(1, 2);
    wide.set(0, 0, true);
    wide.set(0, 1, true);
    CHECK(canonical_form(tall) != canonical_form(wide));
}

TEST_CASE("exact deck equality") {
    Rng rng(31);
    Graph g = random_graph(rng, 8, 0.5);
    auto deck = make_deck(g);
    CHECK(exact_deck_equal(deck, deck));
    CHECK(exact_deck_equal(deck, scramble_deck(deck, 777)));
    CHECK_FALSE(exact_deck_equal(make_deck(p4()), make_deck(star13())));

    auto d5 = make_deck(random_graph(rng, 5, 0.5));
    CHECK_THROWS_AS((void)exact_deck_equal(deck, d5), std::invalid_argument);
}
