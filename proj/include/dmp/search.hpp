#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dmp/coloring.hpp"

namespace dmp {

/// Symmetry group used when identifying colorings: vertex relabelings alone,
/// or additionally permutations of colors whose required orders are equal.
enum class CanonMode { VertexOnly, VertexAndEqualOrderColors };

/// The lexicographically least slot-color string over the symmetry group.
/// Equal codes identify equivalent colorings (for fixed n and k).
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Exact minimization over all vertex permutations (and allowed color
/// permutations). n <= 12. Empty `orders` means all orders equal.
CanonicalCode canonical_form(const EdgeColoring& c, CanonMode mode, const Orders& orders = {});

/// True iff c's own slot string already equals its canonical code.
bool is_canonical(const EdgeColoring& c, CanonMode mode, const Orders& orders = {});

/// Isomorphism code for a bare graph (edge/non-edge as a 2-coloring).
CanonicalCode graph_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

struct SearchOptions {
    bool prune_bipartite = false;   // only valid when every order equals 3
    bool deterministic = false;     // return the counterexample of least code
    bool brute = false;             // delegate to decide_brute
    int workers = 1;
    std::optional<double> budget_seconds;
    std::uint64_t class_budget = 200'000'000;  // feasibility guard on estimated classes
    std::optional<bool> exact_class_stats;     // default: on for n <= 8
};

struct SearchQuery {
    int n = 0;
    int k = 0;
    Orders orders;
    SearchOptions options;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t canonical_classes = 0;  // exact only when exact_class_stats
    std::uint64_t pruned_canonical = 0;
    std::uint64_t pruned_bipartite = 0;
    double wall_ms = 0.0;
    bool completed = true;
};

enum class SearchVerdict { AllGood, Counterexample, BudgetExceeded };

/// AllGood means no k-coloring of K_n avoids every required path order;
/// Counterexample carries a coloring that verifies negatively. A found
/// counterexample is conclusive even when the budget ran out afterwards.
struct SearchOutcome {
    SearchVerdict verdict = SearchVerdict::AllGood;
    std::optional<EdgeColoring> counterexample;
    SearchStats stats;
};

/// Isomorph-free exhaustive decision. Colors are assigned to edge slots in
/// lexicographic order; partial assignments provably dominated by a
/// symmetry-transformed copy are rejected, and with prune_bipartite any
/// branch giving some color class an odd cycle is abandoned (sound for
/// order-3 queries: an odd cycle forces chromatic number >= 3, hence a
/// monotone path of order 3).
SearchOutcome decide(const SearchQuery& q);

/// Oracle without any symmetry reduction: iterates every raw coloring.
/// Requires k^slots <= 2^24. Verdicts must match decide's.
SearchOutcome decide_brute(const SearchQuery& q);

struct ScanRow {
    int n = 0;
    SearchOutcome outcome;
    std::string error;  // nonempty when this row failed (e.g. infeasible)
};

/// One independent decide per n in [n_lo, n_hi] with diagonal orders
/// (m,...,m); rows are reported through on_row as they finish. Failures
/// (budget) are per-row and do not abort the scan. Verdicts are never
/// propagated between values of n.
std::vector<ScanRow> scan(int k, int m, int n_lo, int n_hi, const SearchOptions& options,
                          const std::function<void(const ScanRow&)>& on_row = {});

/// Number of equivalence classes of k-colorings of K_n under the given
/// symmetry group, by exhaustive generation with exact leaf canonicity.
/// n <= 8.
std::uint64_t count_classes(int n, int k, CanonMode mode);

/// The same number by orbit counting over the symmetry group (no
/// enumeration); n <= 10, k <= 6. Used to report class counts where the
/// per-leaf canonicity check would dominate the search.
std::uint64_t count_classes_orbit(int n, int k, CanonMode mode, const Orders& orders = {});

}  // namespace dmp
