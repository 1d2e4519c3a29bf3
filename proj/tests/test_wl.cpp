#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certlab/graphs.hpp"
#include "certlab/rng.hpp"
#include "certlab/wl.hpp"

using namespace certlab;
using namespace certlab::graphs;

TEST_CASE("empty matrix signature") {
    Bipartite m(0, 3);
    auto sig = wl_signature(m);
    CHECK(sig.row_colors.empty());
    CHECK(sig.col_colors.empty());
    CHECK(sig.rows == 0);
    CHECK(sig.cols == 3);
}

TEST_CASE("invariance under independent row and column permutations") {
    Rng rng(808);
    for (int iter = 0; iter < 300; ++iter) {
        const int u = 1 + static_cast<int>(rng.below(7));
        const int v = 1 + static_cast<int>(rng.below(7));
        Bipartite m(u, v);
        for (int r = 0; r < u; ++r)
            for (int c = 0; c < v; ++c)
                if (rng.next_double() < 0.5) m.set(r, c, true);
        Bipartite p = m.permuted(rng.permutation(u), rng.permutation(v));
        CHECK(wl_signature(m) == wl_signature(p));
        CHECK(wl_signature(m, 0) == wl_signature(p, 0));
    }
}

TEST_CASE("path vs star incidences get distinct signatures") {
    // P4 as bipartite incidence: parts {a,c} x {b,d}
    Bipartite path(2, 2);
    path.set(0, 0, true);
    path.set(1, 0, true);
    path.set(1, 1, true);
    // K_{1,3}
    Bipartite star(1, 3);
    for (int c = 0; c < 3; ++c) star.set(0, c, true);
    CHECK(wl_signature(path) != wl_signature(star));

    // same shape, different structure
    Bipartite a(2, 2), b(2, 2);
    a.set(0, 0, true);
    a.set(1, 1, true);
    b.set(0, 0, true);
    b.set(0, 1, true);
    CHECK(wl_signature(a) != wl_signature(b));
}

TEST_CASE("shape is part of the signature") {
    Bipartite m1(2, 3), m2(3, 2);
    CHECK(wl_signature(m1) != wl_signature(m2));
}
