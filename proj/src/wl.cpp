#include "certlab/wl.hpp"

#include <algorithm>
#include <stdexcept>

#include "certlab/rng.hpp"

namespace certlab::graphs {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4);
    std::uint64_t state = h;
    return splitmix64(state);
}

namespace {

struct NodeStats {
    std::int64_t deg, n_sum, n_sq_sum, nn_sum, nn_sq_sum, nnn_sum, n_distinct;
};

std::uint64_t fold(const NodeStats& s) {
    std::uint64_t h = 0x243f6a8885a308d3ULL;
    for (std::int64_t x : {s.deg, s.n_sum, s.n_sq_sum, s.nn_sum, s.nn_sq_sum, s.nnn_sum,
                           s.n_distinct})
        h = hash_mix(h, static_cast<std::uint64_t>(x));
    return h;
}

}  // namespace

WlSignature wl_signature(const Bipartite& m, int steps) {
    if (steps < 0) throw std::invalid_argument("wl_signature: steps must be >= 0");
    WlSignature sig;
    sig.rows = m.u;
    sig.cols = m.v;
    if (m.u == 0 || m.v == 0) return sig;

    std::vector<std::int64_t> r_d(m.u), c_d(m.v);
    for (int r = 0; r < m.u; ++r) r_d[r] = m.row_degree(r);
    for (int c = 0; c < m.v; ++c) c_d[c] = m.col_degree(c);

    auto row_dot = [&](const std::vector<std::int64_t>& col_vals) {
        std::vector<std::int64_t> out(m.u, 0);
        for (int r = 0; r < m.u; ++r)
            for (int c = 0; c < m.v; ++c)
                if (m.get(r, c)) out[r] += col_vals[c];
        return out;
    };
    auto col_dot = [&](const std::vector<std::int64_t>& row_vals) {
        std::vector<std::int64_t> out(m.v, 0);
        for (int c = 0; c < m.v; ++c)
            for (int r = 0; r < m.u; ++r)
                if (m.get(r, c)) out[c] += row_vals[r];
        return out;
    };
    auto squared = [](std::vector<std::int64_t> v) {
        for (auto& x : v) x *= x;
        return v;
    };

    auto r_n_sum = row_dot(c_d);
    auto r_n_sq_sum = row_dot(squared(c_d));
    auto c_n_sum = col_dot(r_d);
    auto c_n_sq_sum = col_dot(squared(r_d));
    auto r_nn_sum = row_dot(c_n_sum);
    auto r_nn_sq_sum = row_dot(c_n_sq_sum);
    auto c_nn_sum = col_dot(r_n_sum);
    auto c_nn_sq_sum = col_dot(r_n_sq_sum);
    auto r_nnn_sum = row_dot(c_nn_sum);
    auto c_nnn_sum = col_dot(r_nn_sum);

    std::vector<std::uint64_t> r_colors(m.u), c_colors(m.v);
    for (int r = 0; r < m.u; ++r) {
        std::vector<std::int64_t> nb_degs;
        for (int c = 0; c < m.v; ++c)
            if (m.get(r, c)) nb_degs.push_back(c_d[c]);
        std::sort(nb_degs.begin(), nb_degs.end());
        const auto distinct = std::unique(nb_degs.begin(), nb_degs.end()) - nb_degs.begin();
        r_colors[r] = fold({r_d[r], r_n_sum[r], r_n_sq_sum[r], r_nn_sum[r], r_nn_sq_sum[r],
                            r_nnn_sum[r], nb_degs.empty() ? 0 : distinct});
    }
    for (int c = 0; c < m.v; ++c) {
        std::vector<std::int64_t> nb_degs;
        for (int r = 0; r < m.u; ++r)
            if (m.get(r, c)) nb_degs.push_back(r_d[r]);
        std::sort(nb_degs.begin(), nb_degs.end());
        const auto distinct = std::unique(nb_degs.begin(), nb_degs.end()) - nb_degs.begin();
        c_colors[c] = fold({c_d[c], c_n_sum[c], c_n_sq_sum[c], c_nn_sum[c], c_nn_sq_sum[c],
                            c_nnn_sum[c], nb_degs.empty() ? 0 : distinct});
    }

    for (int step = 0; step < steps; ++step) {
        std::vector<std::uint64_t> next_r(m.u), next_c(m.v);
        for (int r = 0; r < m.u; ++r) {
            std::vector<std::uint64_t> nbs;
            for (int c = 0; c < m.v; ++c)
                if (m.get(r, c)) nbs.push_back(c_colors[c]);
            std::sort(nbs.begin(), nbs.end());
            std::uint64_t h = hash_mix(0x452821e638d01377ULL, r_colors[r]);
            for (auto x : nbs) h = hash_mix(h, x);
            next_r[r] = h;
        }
        for (int c = 0; c < m.v; ++c) {
            std::vector<std::uint64_t> nbs;
            for (int r = 0; r < m.u; ++r)
                if (m.get(r, c)) nbs.push_back(r_colors[r]);
            std::sort(nbs.begin(), nbs.end());
            std::uint64_t h = hash_mix(0x452821e638d01377ULL, c_colors[c]);
            for (auto x : nbs) h = hash_mix(h, x);
            next_c[c] = h;
        }
        r_colors = std::move(next_r);
        c_colors = std::move(next_c);
    }

    std::sort(r_colors.begin(), r_colors.end());
    std::sort(c_colors.begin(), c_colors.end());
    sig.row_colors = std::move(r_colors);
    sig.col_colors = std::move(c_colors);
    return sig;
}

}  // namespace certlab::graphs
