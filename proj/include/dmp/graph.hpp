#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dmp {

class EdgeColoring;

/// Undirected simple graph on at most 64 vertices. Adjacency is one 64-bit
/// neighbor mask per vertex, so degree and neighborhood queries are single
/// word operations. Instances are immutable once built; the algebra below
/// returns new values, which makes graphs safe to share across threads.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    /// Builds a graph from an explicit edge list. Rejects out-of-range
    /// endpoints, self-loops and duplicate edges, each with its own message.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::uint64_t neighbor_mask(int v) const;

    /// Edge list in lexicographic order, u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    friend Graph complete_graph(int);
    friend Graph complete_bipartite_graph(int, int);
    friend Graph path_graph(int);
    friend Graph cycle_graph(int);
    friend Graph matching_graph(int);
    friend Graph complement(const Graph&);
    friend Graph disjoint_union(const Graph&, const Graph&);
    friend Graph induced_subgraph(const Graph&, const std::vector<int>&);
    friend Graph color_subgraph(const EdgeColoring&, int);
};

// Named families. Vertex labelings are fixed: complete_bipartite puts the
// left side first (vertices 0..a-1), path/cycle use the natural order,
// matching pairs (0,1), (2,3), ...
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph matching_graph(int edge_count);

enum class FamilyKind { Complete, CompleteBipartite, Path, Cycle, Matching };
Graph make_family(FamilyKind kind, const std::vector<int>& params);

// Graph algebra. All results are new graphs; inputs are never modified.
// disjoint_union relabels the second operand by an offset of a.order();
// induced_subgraph keeps the relative order of the listed vertices.
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Two-sided vertex split as bit masks. For graphs with several components
/// the side holding each component's smallest vertex is merged into `left`.
struct Bipartition {
    std::uint64_t left = 0;
    std::uint64_t right = 0;
};

/// Odd cycle certifying non-bipartiteness: consecutive vertices adjacent,
/// last adjacent to first, odd length >= 3.
struct OddCycleWitness {
    std::vector<int> cycle;
};

std::variant<Bipartition, OddCycleWitness> bipartition_of(const Graph& g);

/// Connected components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<int>> components(const Graph& g);

std::vector<int> mask_to_vertices(std::uint64_t mask);

// Text format: header "graph <n>", one line "e <u> <v>" per edge with u < v
// in lexicographic order; lines starting with '#' and blank lines are
// ignored. Violations are rejected with 1-based line numbers.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph load_graph(const std::filesystem::path& path);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace dmp
