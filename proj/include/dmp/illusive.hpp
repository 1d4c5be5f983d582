#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dmp/graph.hpp"

namespace dmp {

/// A bipartite graph together with the sides the dominance conditions refer
/// to (A = left, B = right).
struct IllusiveCandidate {
    Graph graph;
    Bipartition sides;
};

/// Degree-dominance test: either |A| > |B| with A isolate-free and every
/// v in A dominating all its neighbors' degrees, or |A| = |B| with the same
/// dominance plus at least one strict drop.
bool is_illusive(const IllusiveCandidate& cand);

/// Exhausts bipartite graphs with |A| >= |B| and |A|+|B| <= max_vertices,
/// one or more representatives per row/column permutation class, looking for
/// an illusive one. Expected result is nullopt; any hit is returned as a
/// counterexample artifact. max_vertices <= 14.
std::optional<IllusiveCandidate> scan_illusive(int max_vertices);

/// True iff among bipartite graphs with |A| = k, |B| = k+1 where every v in A
/// has degree >= 1 and strictly dominates all its neighbors' degrees, the
/// complete bipartite graph is the only qualifier. k <= 5.
bool check_k_kplus1(int k);

/// True iff every connected bipartite graph with |A| >= |B| in which each
/// v in A weakly dominates its neighbors' degrees is balanced and regular.
/// max_vertices <= 12.
bool check_balanced_regular(int max_vertices);

/// Both sides of the counting inequality behind the 2^k - 1 upper bound for
/// order-3 paths, evaluated in exact integer arithmetic:
///   lhs = ceil( ceil(sqrt((2^(k-1)-1) * (2^k-k-1) / k)) / 2^floor((k-1)/2) )
///   rhs = k - floor((k-1)/2)
/// holds iff lhs > rhs, weak inequality sufficing when lhs is odd. 4 <= k <= 20.
struct MarginCheck {
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};
MarginCheck upper_bound_margin(int k);

/// Enumeration backbone shared by the scans: biadjacency matrices (rows as
/// column bitmasks, column 0 the most significant bit) whose rows and
/// columns are both nonincreasing as binary strings. Every permutation class
/// has at least one such representative. visit returns false to stop early;
/// the function returns false iff stopped.
bool for_each_sorted_biadjacency(int rows, int cols,
                                 const std::function<bool(const std::vector<std::uint32_t>&)>& visit);
std::uint64_t count_sorted_biadjacency(int rows, int cols);

}  // namespace dmp
