#pragma once

#include <optional>
#include <vector>

#include "dmp/graph.hpp"

namespace dmp {

/// A path whose vertex degrees, measured in the host graph, never decrease
/// along the sequence.
struct DegreeMonotonePath {
    std::vector<int> vertices;
    std::vector<int> degrees;
};

struct MpResult {
    int value = 0;
    DegreeMonotonePath witness;
};

/// Checks the witness invariants against the host graph without touching any
/// search state: distinct vertices, consecutive adjacency, degrees recorded
/// correctly and nondecreasing.
bool is_valid_witness(const Graph& g, const DegreeMonotonePath& path);

/// Exact mp(g) with a witness of that order. Depth-first extension over
/// vertices of nondecreasing degree, memoized per (endpoint, visited subset
/// of the endpoint's degree class); once a path leaves a degree class it can
/// never return, so nothing else needs to be remembered.
MpResult mp_exact(const Graph& g);

/// Reference value computed by enumerating every simple path (no degree
/// ordering tricks) and filtering the monotone ones. Requires n <= 12.
int mp_oracle(const Graph& g);

/// Witness of order >= m, or nullopt iff mp(g) < m. For m == 3 uses the
/// local-extremum reading: a middle vertex with one neighbor of degree at
/// most its own and a distinct neighbor of degree at least its own.
std::optional<DegreeMonotonePath> has_mdm(const Graph& g, int m);

/// Orients uv from u to v iff deg(u) < deg(v), ties broken toward the larger
/// index, and returns the order of a longest directed path in the resulting
/// acyclic orientation. Always a lower bound for mp(g).
int degree_orientation_lower(const Graph& g);

/// Exact chromatic number via branch and bound (clique lower bound, greedy
/// upper bound, saturation-guided color assignment). Requires n <= 25.
int chromatic_number(const Graph& g);

}  // namespace dmp
