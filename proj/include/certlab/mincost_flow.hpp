#pragma once

#include <cstdint>
#include <vector>

namespace certlab::flow {

// Min-cost max-flow by successive shortest augmenting paths with node
// potentials (Bellman-Ford once for the initial potentials since edge
// costs may be negative, Dijkstra afterwards). Exact on integer costs.
class MinCostFlow {
  public:
    explicit MinCostFlow(int node_count);

    // Adds a directed edge; returns its id for flow queries.
    int add_edge(int from, int to, int capacity, long long cost);

    // Augments until no path from s to t remains; among all maximum flows
    // the result has minimum total cost. Returns {flow, cost}.
    std::pair<long long, long long> run(int s, int t);

    int flow_on(int edge_id) const;

  private:
    struct Edge {
        int to;
        int cap;
        long long cost;
        int rev;
    };
    int n_;
    std::vector<std::vector<Edge>> graph_;
    std::vector<std::pair<int, int>> edge_ref_;  // id -> (node, index)
};

// Degree-constrained 0-1 assignment: supplies on the left, demands on the
// right, unit-capacity candidate edges with integer costs. Infeasible
// problems yield the partial assignment realized by the maximum flow.
struct AssignmentProblem {
    std::vector<int> supplies;
    std::vector<int> demands;
    struct Candidate {
        int left, right;
        long long cost;
    };
    std::vector<Candidate> candidates;
};

std::vector<std::pair<int, int>> assign_block(const AssignmentProblem& problem);

}  // namespace certlab::flow
