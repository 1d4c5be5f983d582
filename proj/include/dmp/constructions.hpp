#pragma once

#include <vector>

#include "dmp/coloring.hpp"

namespace dmp {

/// m consecutive colorings c_0,...,c_{m-1} sharing the color count k, where
/// c_j has base_size - j vertices and none contains a monochromatic
/// degree-monotone path of order m in any color.
struct SeedSet {
    int k = 0;
    int m = 0;
    std::vector<EdgeColoring> members;  // sizes strictly descending by 1

    int base_size() const { return members.empty() ? 0 : members.front().order(); }
};

/// Throws unless the set is well formed and every member verifies negatively
/// for orders (m,...,m).
void validate_seed_set(const SeedSet& seeds);

/// The recursive clique-block coloring avoiding monochromatic degree-monotone
/// paths of order m with k colors, on exactly ((m-1)^k + (m-1))/2 - t
/// vertices. k = 2 base: cliques of sizes 1..m-1 (block of size t omitted
/// when t >= 1), same-block edges color 0, cross edges color 1. Each further
/// color joins m-1 recursively built blocks with the new color. Output is
/// verified negative before being returned.
EdgeColoring lower_bound_coloring(int k, int m, int t);

/// Lifts a seed set to k+1 colors: dropping each member in turn, the union
/// of the rest with all cross edges in the new color gives m colorings of
/// sizes q, q-1, ..., q-m+1 where q = (m-1)t - (m-1)(m-2)/2 and t is the
/// largest seed size. Every output is verified negative.
SeedSet lift_seeds(const SeedSet& seeds, int m);

/// 2-coloring of K_{2m-3} witnessing tightness for orders (m, 3): color 1 is
/// the complete bipartite graph on m-1 and m-2 vertices, color 0 its
/// complement (two disjoint cliques).
EdgeColoring offdiag_tight(int m);

/// Seed sets without monochromatic degree-monotone paths of order 3:
/// k = 3 returns the stored fixtures on 7, 6, 5 vertices; larger k lifts
/// them iteratively, reaching sizes 3*2^(k-2)+1 and the two below. k <= 6.
SeedSet m3_family(int k);

/// Sizes of the top-level blocks of lower_bound_coloring(k, m, t), ascending
/// block order; the color-(k-1) subgraph is complete multipartite with
/// exactly these parts.
std::vector<int> lower_bound_blocks(int k, int m, int t);

}  // namespace dmp
