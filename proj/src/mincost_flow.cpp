#include "certlab/mincost_flow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace certlab::flow {

namespace {
constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
}

MinCostFlow::MinCostFlow(int node_count) : n_(node_count), graph_(node_count) {}

int MinCostFlow::add_edge(int from, int to, int capacity, long long cost) {
    const int id = static_cast<int>(edge_ref_.size());
    graph_[from].push_back({to, capacity, cost, static_cast<int>(graph_[to].size())});
    graph_[to].push_back({from, 0, -cost, static_cast<int>(graph_[from].size()) - 1});
    edge_ref_.emplace_back(from, static_cast<int>(graph_[from].size()) - 1);
    return id;
}

std::pair<long long, long long> MinCostFlow::run(int s, int t) {
    long long total_flow = 0, total_cost = 0;

    // initial potentials; costs can be negative before the first augment
    std::vector<long long> potential(n_, kInf);
    potential[s] = 0;
    for (int pass = 0; pass < n_; ++pass) {
        bool changed = false;
        for (int v = 0; v < n_; ++v) {
            if (potential[v] == kInf) continue;
            for (const Edge& e : graph_[v]) {
                if (e.cap > 0 && potential[v] + e.cost < potential[e.to]) {
                    potential[e.to] = potential[v] + e.cost;
                    changed = true;
                }
            }
        }
        if (!changed) break;
        if (pass == n_ - 1)
            throw std::invalid_argument("MinCostFlow: negative cycle in input");
    }

    std::vector<long long> dist(n_);
    std::vector<int> prev_node(n_), prev_edge(n_);
    for (;;) {
        dist.assign(n_, kInf);
        dist[s] = 0;
        using Item = std::pair<long long, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        heap.emplace(0, s);
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > dist[v]) continue;
            for (std::size_t i = 0; i < graph_[v].size(); ++i) {
                const Edge& e = graph_[v][i];
                if (e.cap <= 0 || potential[v] == kInf || potential[e.to] == kInf) continue;
                const long long nd = d + e.cost + potential[v] - potential[e.to];
                if (nd < dist[e.to]) {
                    dist[e.to] = nd;
                    prev_node[e.to] = v;
                    prev_edge[e.to] = static_cast<int>(i);
                    heap.emplace(nd, e.to);
                }
            }
        }
        if (dist[t] == kInf) break;
        for (int v = 0; v < n_; ++v)
            if (dist[v] < kInf && potential[v] < kInf) potential[v] += dist[v];

        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s; v = prev_node[v])
            push = std::min(push, graph_[prev_node[v]][prev_edge[v]].cap);
        for (int v = t; v != s; v = prev_node[v]) {
            Edge& e = graph_[prev_node[v]][prev_edge[v]];
            e.cap -= push;
            graph_[e.to][e.rev].cap += push;
            total_cost += static_cast<long long>(push) * e.cost;
        }
        total_flow += push;
    }
    return {total_flow, total_cost};
}

int MinCostFlow::flow_on(int edge_id) const {
    const auto [node, index] = edge_ref_[edge_id];
    const Edge& e = graph_[node][index];
    return graph_[e.to][e.rev].cap;  // reverse capacity == pushed flow
}

std::vector<std::pair<int, int>> assign_block(const AssignmentProblem& problem) {
    const int left = static_cast<int>(problem.supplies.size());
    const int right = static_cast<int>(problem.demands.size());
    MinCostFlow mcf(left + right + 2);
    const int s = left + right, t = left + right + 1;
    for (int i = 0; i < left; ++i)
        if (problem.supplies[i] > 0) mcf.add_edge(s, i, problem.supplies[i], 0);
    for (int j = 0; j < right; ++j)
        if (problem.demands[j] > 0) mcf.add_edge(left + j, t, problem.demands[j], 0);
    std::vector<int> ids;
    ids.reserve(problem.candidates.size());
    for (const auto& cand : problem.candidates)
        ids.push_back(mcf.add_edge(cand.left, left + cand.right, 1, cand.cost));
    mcf.run(s, t);
    std::vector<std::pair<int, int>> chosen;
    for (std::size_t k = 0; k < problem.candidates.size(); ++k)
        if (mcf.flow_on(ids[k]) == 1)
            chosen.emplace_back(problem.candidates[k].left, problem.candidates[k].right);
    return chosen;
}

}  // namespace certlab::flow
