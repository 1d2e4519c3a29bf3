#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "certlab/involutions.hpp"
#include "certlab/latin.hpp"
#include "certlab/rng.hpp"

using namespace certlab;
using namespace certlab::invol;
using namespace certlab::latin;

TEST_CASE("support_size basics") {
    auto l = cyclic_square(6);
    CHECK(support_size(l, l) == 0);

    // single 3-cycle row trade changes 3 columns in 2 rows
    Rng rng(1);
    bool checked = false;
    for (int iter = 0; iter < 200 && !checked; ++iter) {
        auto sq = random_square(6, rng.next_u64());
        auto cycles = odd_cycles(matching_permutation(sq, LineMode::Row, 0, 1));
        for (const auto& c : cycles) {
            if (c.size() != 3) continue;
            auto sq2 = apply_trade(sq, CycleTrade{LineMode::Row, 0, 1, c});
            CHECK(support_size(sq, sq2) == 6);
            checked = true;
            break;
        }
    }
    CHECK(checked);

    // full row swap at order n touches 2n cells
    std::vector<int> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    auto swapped = apply_trade(l, CycleTrade{LineMode::Row, 0, 3, all});
    CHECK(support_size(l, swapped) == 12);

    CHECK_THROWS_AS(support_size(cyclic_square(4), cyclic_square(6)), std::invalid_argument);
}

TEST_CASE("trade sequence is deterministic and ordered as specified") {
    auto a = TradeSequenceSpec::generate(10, 42, true);
    auto b = TradeSequenceSpec::generate(10, 42, true);
    CHECK(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].mode == b.entries[i].mode);
        CHECK(a.entries[i].i1 == b.entries[i].i1);
        CHECK(a.entries[i].i2 == b.entries[i].i2);
        CHECK(a.entries[i].sabotage == b.entries[i].sabotage);
    }
    // n = 10 > 8: two sabotage entries, then 51 * 5 row entries, then columns
    CHECK(a.entries[0].sabotage);
    CHECK(a.entries[1].sabotage);
    CHECK(a.entries.size() == 2 + 2 * 51 * 5);
    CHECK_FALSE(a.entries[2].sabotage);
    CHECK(a.entries[2].mode == LineMode::Row);
    CHECK(a.entries[2].i1 == 0);
    CHECK(a.entries[2].i2 == 5);

    // n = 8: sabotage disabled regardless of the flag
    auto c = TradeSequenceSpec::generate(8, 42, true);
    CHECK(c.entries.size() == 2 * 51 * 4);
    CHECK_FALSE(c.entries[0].sabotage);

    for (const auto& e : a.entries) CHECK(e.i1 != e.i2);
}

TEST_CASE("experiment maps refuse odd orders") {
    auto l5 = cyclic_square(5);
    CHECK_THROWS_AS(experiment1_map(l5), std::invalid_argument);
    CHECK_THROWS_AS(experiment2_map(l5), std::invalid_argument);
    CHECK_THROWS_AS(experiment3_map(l5), std::invalid_argument);
}

TEST_CASE("experiment 1: validity, measured involution, fallback non-identity") {
    Rng rng(11);
    for (int n : {8, 10}) {
        int involutive = 0, trials = 40;
        for (int t = 0; t < trials; ++t) {
            auto l = random_square(n, rng.next_u64());
            auto out = experiment1_map(l);
            CHECK(out.output.valid());
            CHECK(out.support_size == support_size(l, out.output));
            CHECK(out.output != l);
            auto back = experiment1_map(out.output);
            involutive += back.output == l;
        }
        // the scan-order stability rule is heuristic; the involution rate is
        // a measured metric with a high floor, not a theorem
        CHECK(involutive >= trials * 9 / 10);
    }

    // the cyclic square is rigid enough to reach a stable trade or a
    // fallback; fallbacks are non-identity by construction
    auto fb_sym = cyclic_square(10);  // n/2 odd
    auto out1 = experiment1_map(fb_sym);
    CHECK(out1.output != fb_sym);
    auto fb_conj = cyclic_square(8);  // n/2 even
    auto out2 = experiment1_map(fb_conj);
    CHECK(out2.output != fb_conj);
}

TEST_CASE("experiment 1 sabotage switch changes the sequence only for n > 8") {
    auto l = random_square(10, 909);
    Experiment1Options with{true, 42}, without{false, 42};
    auto a = experiment1_map(l, with);
    auto b = experiment1_map(l, without);
    CHECK(a.output.valid());
    CHECK(b.output.valid());
    // sabotage entries sit before flip entries, so when one fires the
    // outputs differ; mostly they do not fire and the results agree
    auto l8 = random_square(8, 909);
    CHECK(experiment1_map(l8, with).output == experiment1_map(l8, without).output);
}

TEST_CASE("experiment 2: validity hard, high success at n >= 10") {
    Rng rng(22);
    for (int n : {8, 10}) {
        int success = 0, trials = 40;
        for (int t = 0; t < trials; ++t) {
            auto l = random_square(n, rng.next_u64());
            auto out = experiment2_map(l);
            CHECK(out.output.valid());
            const bool involutive = experiment2_map(out.output).output == l;
            const bool non_identity = out.output != l;
            const bool flips = sign(out.output) == -sign(l);
            success += involutive && non_identity && flips;
        }
        if (n >= 10) CHECK(success >= trials * 9 / 10);
    }
}

TEST_CASE("experiment 3: involution and flip under isotopy stress") {
    Rng rng(33);
    for (int n : {8, 10}) {
        int involutive = 0, flips = 0, trials = 30;
        for (int t = 0; t < trials; ++t) {
            auto base = random_square(n, rng.next_u64());
            auto l = apply_isotopy(base, random_isotopy(n, rng.next_u64()));
            auto out = experiment3_map(l);
            CHECK(out.output.valid());
            CHECK(out.output != l);
            involutive += experiment3_map(out.output).output == l;
            flips += sign(out.output) == -sign(l);
        }
        // the tiered cascade's stability property is the paper's conjecture,
        // not a theorem; rare conjugation-tier pairs disagree
        CHECK(involutive >= trials - 3);
        CHECK(flips >= trials * 9 / 10);
    }
}

TEST_CASE("applied single odd-cycle trades obey the sign law") {
    // cross-check: when experiment 2 applies a row- or column-view trade,
    // recomputing signs must match the latin module's law
    Rng rng(44);
    for (int t = 0; t < 30; ++t) {
        auto l = random_square(10, rng.next_u64());
        auto out = experiment2_map(l);
        if (out.kind != MoveKind::Trade) continue;
        // row/col odd trades flip; symbol trades preserve; either way the
        // support is odd, so a flip certifies a row/col trade
        const int s_in = sign(l), s_out = sign(out.output);
        CHECK((s_out == s_in || s_out == -s_in));
    }
}
