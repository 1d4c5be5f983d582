#include "dmp/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void check_order(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw ValidationError("vertex count " + std::to_string(n) + " outside 0.." +
                              std::to_string(Graph::kMaxVertices));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw ValidationError("vertex " + std::to_string(v) + " out of range for order " +
                              std::to_string(n_));
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw ValidationError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[static_cast<std::size_t>(u)] >> v) & 1) out.emplace_back(u, v);
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 0 || b < 0) throw ValidationError("negative side size");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge_unchecked(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge_unchecked(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge_unchecked(0, n - 1);
    return g;
}

Graph matching_graph(int edge_count) {
    if (edge_count < 0) throw ValidationError("negative matching size");
    Graph g(2 * edge_count);
    for (int i = 0; i < edge_count; ++i) g.add_edge_unchecked(2 * i, 2 * i + 1);
    return g;
}

Graph make_family(FamilyKind kind, const std::vector<int>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw ValidationError("family expects " + std::to_string(want) + " parameter(s), got " +
                                  std::to_string(params.size()));
    };
    switch (kind) {
        case FamilyKind::Complete: arity(1); return complete_graph(params[0]);
        case FamilyKind::CompleteBipartite: arity(2); return complete_bipartite_graph(params[0], params[1]);
        case FamilyKind::Path: arity(1); return path_graph(params[0]);
        case FamilyKind::Cycle: arity(1); return cycle_graph(params[0]);
        case FamilyKind::Matching: arity(1); return matching_graph(params[0]);
    }
    throw ValidationError("unknown family kind");
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) out.add_edge_unchecked(u, v);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > Graph::kMaxVertices)
        throw ValidationError("disjoint union exceeds " + std::to_string(Graph::kMaxVertices) +
                              " vertices");
    Graph out(a.order() + b.order());
    for (const auto& [u, v] : a.edges()) out.add_edge_unchecked(u, v);
    for (const auto& [u, v] : b.edges()) out.add_edge_unchecked(u + a.order(), v + a.order());
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.has_edge(vertices[i], vertices[j]))
                out.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

std::variant<Bipartition, OddCycleWitness> bipartition_of(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    Bipartition parts;

    for (int root = 0; root < n; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : mask_to_vertices(g.neighbor_mask(u))) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = side[static_cast<std::size_t>(u)] ^ 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    queue.push_back(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    // Same side along a BFS edge: the two tree paths up to the
                    // lowest common ancestor plus edge uv form an odd cycle.
                    std::vector<int> up_u, up_v;
                    for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) up_u.push_back(x);
                    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) up_v.push_back(x);
                    while (up_u.size() >= 2 && up_v.size() >= 2 &&
                           up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
                        up_u.pop_back();
                        up_v.pop_back();
                    }
                    std::vector<int> cycle(up_u.begin(), up_u.end());
                    cycle.insert(cycle.end(), up_v.rbegin() + 1, up_v.rend());
                    return OddCycleWitness{std::move(cycle)};
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (side[static_cast<std::size_t>(v)] == 0)
            parts.left |= std::uint64_t{1} << v;
        else
            parts.right |= std::uint64_t{1} << v;
    }
    return parts;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int root = 0; root < n; ++root) {
        if ((seen >> root) & 1) continue;
        std::uint64_t comp = bit(root);
        std::uint64_t frontier = bit(root);
        while (frontier) {
            std::uint64_t next = 0;
            for (int v : mask_to_vertices(frontier)) next |= g.neighbor_mask(v);
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(mask_to_vertices(comp));
    }
    return out;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::uint64_t> seen;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "graph") {
            if (n != -1) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n) || n < 0 || n > Graph::kMaxVertices)
                throw ParseError(lineno, "bad vertex count");
            seen.assign(static_cast<std::size_t>(n), 0);
        } else if (tok == "e") {
            if (n == -1) throw ParseError(lineno, "edge before header");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop");
            if (u > v) throw ParseError(lineno, "edge endpoints must satisfy u < v");
            if ((seen[static_cast<std::size_t>(u)] >> v) & 1) throw ParseError(lineno, "duplicate edge");
            edges.emplace_back(u, v);
            seen[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        } else {
            throw ParseError(lineno, "unknown directive '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#') throw ParseError(lineno, "trailing tokens");
    }
    if (n == -1) throw ParseError(lineno, "missing 'graph <n>' header");
    return Graph::from_edges(n, edges);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.order() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << serialize_graph(g);
}

}  // namespace dmp
