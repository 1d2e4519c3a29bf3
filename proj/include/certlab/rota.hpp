#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "certlab/gf2.hpp"
#include "certlab/rng.hpp"

namespace certlab::rota {

// n disjoint row bases over GF(2)^n. Elements are addressed by (row,
// index) even when vector values coincide across rows.
struct Instance {
    int n = 0;
    std::vector<std::vector<gf2::Vec>> bases;  // bases[i][k]
    std::string kind;                          // "generic" | "trap"
    std::uint64_t seed = 0;

    // single-word mirrors of the basis vectors (n <= 64), kept for the
    // rollout hot path
    std::vector<std::vector<std::uint64_t>> words;

    void rebuild_words();
};

// n x n grid; entry a[i][j] is the index k of basis element (i, k)
// assigned to column j, or -1. Within each row the non-(-1) entries are
// pairwise distinct.
struct AssignmentState {
    int n = 0;
    std::vector<std::vector<int>> a;

    explicit AssignmentState(int n_) : n(n_), a(n_, std::vector<int>(n_, -1)) {}
    bool row_entries_distinct() const;
};

struct Move {
    enum class Kind { Insert, Repair, Terminate };
    Kind kind = Kind::Terminate;
    // Insert: place index `idx` of row `row` into column `col`.
    int row = 0, col = 0, idx = 0;
    // Repair: swap row `row`'s assignment between the dependent column
    // `broken_col` (the one being repaired) and `donor_col`.
    int broken_col = 0, donor_col = 0;
};

struct ColumnStatus {
    int size = 0, rank = 0, deficit = 0, dup = 0;
    bool valid = false, full = false;
};

// Column j's vectors in row order.
std::vector<gf2::Vec> column_set(const AssignmentState& state, const Instance& inst, int j);
ColumnStatus column_status(const AssignmentState& state, const Instance& inst, int j);

// All legal moves in the fixed total order used for tie-breaking:
// Inserts lexicographic on (row, col, idx), then Repairs lexicographic on
// (broken_col, donor_col, row) with rows restricted to circuit elements of
// the broken column, then Terminate.
std::vector<Move> legal_moves(const AssignmentState& state, const Instance& inst);

// Post-move features, exactly the key set of the evolved policies. For a
// repair, `target` is the dependent column being repaired and `source` is
// the donor column (the donor is the one that can lose fullness).
struct FeatureVector {
    double is_terminate_move = 0;
    double global_num_full_cols = 0;  // before the move
    double delta_num_valid = 0;
    double target_col_becomes_full = 0;
    double source_col_was_full_and_is_not_anymore = 0;
    double is_repair_move = 0;
    double is_insert_move = 0;
    double target_rank_deficit_after = 0;
    double source_rank_deficit_after = 0;
    double circuit_size = 0;  // of the target column, after the move
    double target_dup_count_after = 0;
    double rank = 0;
    double progress_ratio = 0;  // global_num_full_cols / rank

    // Lookup by feature key; throws std::invalid_argument on unknown keys
    // (guards against silent feature drift at the harness surface).
    double get(std::string_view key) const;
};

FeatureVector extract_features(const AssignmentState& state, const Instance& inst,
                               const Move& move);

enum class PolicyId { Rank5, Rank7, ScaleAware };

PolicyId policy_from_name(std::string_view name);
std::string_view policy_name(PolicyId id);

// Score noise stream; disabled (null rng) draws are zero, the
// de-randomized mode of the policies.
struct NoiseSource {
    Rng* rng = nullptr;
    double uniform(double lo, double hi) { return rng ? rng->uniform(lo, hi) : 0.0; }
    bool chance(double p) { return rng ? rng->next_double() < p : false; }
};

double policy_score(PolicyId policy, const FeatureVector& f, NoiseSource& noise);

struct RolloutCounters {
    int steps = 0;
    int completions = 0;   // column-became-full events
    int breaks = 0;        // column-lost-fullness events
    int repairs = 0;       // repair moves applied
    int final_valid = 0;   // valid columns at termination
    bool success = false;  // all columns re-verified as full bases
};

struct RolloutResult {
    RolloutCounters counters;
    AssignmentState final_state;
    bool terminated_early = false;  // policy chose Terminate
};

// Algorithm: from the empty state, greedily apply the argmax-scored legal
// move until all columns are full bases or the step limit runs out. Ties
// keep the earliest move in the fixed total order. Success is re-verified
// by gf2 rank at termination, independent of the engine's bookkeeping.
RolloutResult greedy_rollout(const Instance& inst, PolicyId policy, int step_limit,
                             std::uint64_t seed, bool noise_enabled = true);

struct FitnessWeights {
    double alpha = 0.10, beta = 0.06, gamma = 0.12, delta = 0.02, epsilon = 0.03;
};

// success + beta*completions - gamma*breaks - delta*repairs
//         + epsilon*final_valid/n - alpha*steps/step_limit
double fitness(const RolloutCounters& counters, const FitnessWeights& weights,
               int step_limit, int n);

// Pool recipe {b_i} U {b_i+b_{i+1}} U {b_i+b_{i+2}} from the standard
// basis (randomized=false) or the columns of a random GL(n,2) element,
// deduplicated, then truncated or padded with fresh random nonzero
// vectors to exactly target_size.
std::vector<gf2::Vec> gen_pool(int n, std::uint64_t seed, bool randomized, int target_size);

// Natural recipe size 3n-3, the fixed-rank pool target.
int recipe_pool_size(int n);
// Variable-rank pool target ceil(2.2 n).
int variable_pool_size(int n);

enum class InstanceKind { Generic, Trap };

// Generic: each row is a random independent n-subset of the pool. Trap:
// first samples a dependent n-subset D of the pool, then forces D[i] into
// row i while keeping the row independent.
Instance gen_instance(const std::vector<gf2::Vec>& pool, int n, InstanceKind kind,
                      std::uint64_t seed);

}  // namespace certlab::rota
