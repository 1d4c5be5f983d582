#include "dmp/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void require_nonempty(const Graph& g) {
    if (g.order() == 0) throw ValidationError("graph must have at least one vertex");
}

struct StateKey {
    std::uint64_t class_mask;  // visited vertices inside the endpoint's degree class
    int v;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        std::uint64_t x = k.class_mask + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(k.v) + 1);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        return static_cast<std::size_t>(x);
    }
};

class MpSolver {
public:
    explicit MpSolver(const Graph& g) : g_(g), n_(g.order()) {
        deg_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) deg_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    // Longest monotone path starting at v given `used` already visited inside
    // v's degree class (v included). Higher-degree classes are untouched by
    // construction, lower ones are unreachable.
    int extension(int v, std::uint64_t used) {
        const StateKey key{used, v};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        int best = 1;
        const std::uint64_t nbrs = g_.neighbor_mask(v);
        for (std::uint64_t m = nbrs; m;) {
            const int w = std::countr_zero(m);
            m &= m - 1;
            const int dv = deg_[static_cast<std::size_t>(v)];
            const int dw = deg_[static_cast<std::size_t>(w)];
            if (dw > dv) {
                best = std::max(best, 1 + extension(w, bit(w)));
            } else if (dw == dv && !((used >> w) & 1)) {
                best = std::max(best, 1 + extension(w, used | bit(w)));
            }
        }
        memo_.emplace(key, best);
        return best;
    }

    MpResult solve() {
        int best = 0, start = 0;
        for (int v = 0; v < n_; ++v) {
            const int val = extension(v, bit(v));
            if (val > best) {
                best = val;
                start = v;
            }
        }
        MpResult out;
        out.value = best;
        int v = start;
        std::uint64_t used = bit(v);
        out.witness.vertices.push_back(v);
        out.witness.degrees.push_back(deg_[static_cast<std::size_t>(v)]);
        int remaining = best - 1;
        while (remaining > 0) {
            bool moved = false;
            for (std::uint64_t m = g_.neighbor_mask(v); m && !moved;) {
                const int w = std::countr_zero(m);
                m &= m - 1;
                const int dv = deg_[static_cast<std::size_t>(v)];
                const int dw = deg_[static_cast<std::size_t>(w)];
                std::uint64_t next_used;
                if (dw > dv)
                    next_used = bit(w);
                else if (dw == dv && !((used >> w) & 1))
                    next_used = used | bit(w);
                else
                    continue;
                if (extension(w, next_used) == remaining) {
                    v = w;
                    used = next_used;
                    out.witness.vertices.push_back(v);
                    out.witness.degrees.push_back(dw);
                    --remaining;
                    moved = true;
                }
            }
            if (!moved) throw std::logic_error("mp witness reconstruction failed");
        }
        return out;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> deg_;
    std::unordered_map<StateKey, int, StateHash> memo_;
};

// Bounded search for a monotone path of order exactly m, used for m >= 2.
bool bounded_mdm(const Graph& g, int m, int v, std::uint64_t used, std::vector<int>& path) {
    if (static_cast<int>(path.size()) == m) return true;
    for (std::uint64_t mask = g.neighbor_mask(v); mask;) {
        const int w = std::countr_zero(mask);
        mask &= mask - 1;
        if ((used >> w) & 1) continue;
        if (g.degree(w) < g.degree(v)) continue;
        path.push_back(w);
        if (bounded_mdm(g, m, w, used | bit(w), path)) return true;
        path.pop_back();
    }
    return false;
}

DegreeMonotonePath with_degrees(const Graph& g, std::vector<int> vertices) {
    DegreeMonotonePath p;
    p.degrees.reserve(vertices.size());
    for (int v : vertices) p.degrees.push_back(g.degree(v));
    p.vertices = std::move(vertices);
    return p;
}

}  // namespace

bool is_valid_witness(const Graph& g, const DegreeMonotonePath& path) {
    const auto& vs = path.vertices;
    if (vs.empty() || vs.size() != path.degrees.size()) return false;
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const int v = vs[i];
        if (v < 0 || v >= g.order()) return false;
        if ((seen >> v) & 1) return false;
        seen |= bit(v);
        if (path.degrees[i] != g.degree(v)) return false;
        if (i > 0 && path.degrees[i] < path.degrees[i - 1]) return false;
        if (i > 0 && !g.has_edge(vs[i - 1], v)) return false;
    }
    return true;
}

MpResult mp_exact(const Graph& g) {
    require_nonempty(g);
    return MpSolver(g).solve();
}

int mp_oracle(const Graph& g) {
    require_nonempty(g);
    if (g.order() > 12) throw FeasibilityError("mp_oracle supports at most 12 vertices");
    int best = 1;
    std::vector<int> stack;
    // Plain depth-first enumeration of every simple path; each prefix is
    // itself a path, so monotonicity is re-checked at every node.
    auto dfs = [&](auto&& self, int v, std::uint64_t used, bool monotone, int len) -> void {
        if (monotone) best = std::max(best, len);
        for (std::uint64_t mask = g.neighbor_mask(v); mask;) {
            const int w = std::countr_zero(mask);
            mask &= mask - 1;
            if ((used >> w) & 1) continue;
            self(self, w, used | bit(w), monotone && g.degree(w) >= g.degree(v), len + 1);
        }
    };
    for (int v = 0; v < g.order(); ++v) dfs(dfs, v, bit(v), true, 1);
    return best;
}

std::optional<DegreeMonotonePath> has_mdm(const Graph& g, int m) {
    if (m < 1) throw ValidationError("path order must be >= 1");
    const int n = g.order();
    if (m > n) return std::nullopt;
    if (m == 1) {
        if (n == 0) return std::nullopt;
        return with_degrees(g, {0});
    }
    if (m == 2) {
        for (int u = 0; u < n; ++u) {
            const std::uint64_t mask = g.neighbor_mask(u);
            if (!mask) continue;
            int v = std::countr_zero(mask);
            if (g.degree(u) <= g.degree(v)) return with_degrees(g, {u, v});
            return with_degrees(g, {v, u});
        }
        return std::nullopt;
    }
    if (m == 3) {
        // Middle vertex with a neighbor of degree <= its own and a distinct
        // neighbor of degree >= its own.
        for (int v = 0; v < n; ++v) {
            const int dv = g.degree(v);
            const auto nbrs = mask_to_vertices(g.neighbor_mask(v));
            if (nbrs.size() < 2) continue;
            int lo = nbrs[0], hi = nbrs[0];
            for (int w : nbrs) {
                if (g.degree(w) < g.degree(lo)) lo = w;
                if (g.degree(w) > g.degree(hi)) hi = w;
            }
            if (g.degree(lo) > dv || g.degree(hi) < dv) continue;
            // lo == hi only when all neighbor degrees are equal (and then
            // equal to dv); any second neighbor serves as the upper end.
            if (lo == hi) hi = (nbrs[0] == lo) ? nbrs[1] : nbrs[0];
            return with_degrees(g, {lo, v, hi});
        }
        return std::nullopt;
    }
    for (int v = 0; v < n; ++v) {
        std::vector<int> path{v};
        if (bounded_mdm(g, m, v, bit(v), path)) return with_degrees(g, std::move(path));
    }
    return std::nullopt;
}

int degree_orientation_lower(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    // Arcs increase strictly in (degree, index), so that order is topological.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
    std::vector<int> longest(static_cast<std::size_t>(n), 1);
    int best = 1;
    for (int u : order) {
        for (int v : mask_to_vertices(g.neighbor_mask(u))) {
            if (std::pair(g.degree(u), u) < std::pair(g.degree(v), v)) {
                longest[static_cast<std::size_t>(v)] =
                    std::max(longest[static_cast<std::size_t>(v)], longest[static_cast<std::size_t>(u)] + 1);
            }
        }
        best = std::max(best, longest[static_cast<std::size_t>(u)]);
    }
    return best;
}

namespace {

int max_clique(const std::vector<std::uint64_t>& adj) {
    int best = 0;
    auto expand = [&](auto&& self, std::uint64_t r_size, std::uint64_t p, std::uint64_t x) -> void {
        if (!p && !x) {
            best = std::max(best, static_cast<int>(r_size));
            return;
        }
        if (static_cast<int>(r_size) + std::popcount(p) <= best) return;
        // pivot on the candidate covering most of P
        int pivot = -1, cover = -1;
        for (std::uint64_t m = p | x; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int c = std::popcount(p & adj[static_cast<std::size_t>(v)]);
            if (c > cover) {
                cover = c;
                pivot = v;
            }
        }
        std::uint64_t ext = p & ~adj[static_cast<std::size_t>(pivot)];
        while (ext) {
            const int v = std::countr_zero(ext);
            ext &= ext - 1;
            const std::uint64_t vb = std::uint64_t{1} << v;
            self(self, r_size + 1, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)]);
            p &= ~vb;
            x |= vb;
        }
    };
    const std::uint64_t all =
        adj.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << adj.size()) - 1);
    expand(expand, 0, all, 0);
    return best;
}

int greedy_colors(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> order = verts;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int used = 0;
    for (int v : order) {
        std::uint64_t taken = 0;
        for (int w : mask_to_vertices(g.neighbor_mask(v)))
            if (color[static_cast<std::size_t>(w)] >= 0) taken |= std::uint64_t{1} << color[static_cast<std::size_t>(w)];
        const int c = std::countr_one(taken);
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

bool k_colorable(const std::vector<std::uint64_t>& adj, int k) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto dfs = [&](auto&& self, int colored, int max_used) -> bool {
        if (colored == n) return true;
        // saturation-first vertex selection
        int pick = -1, sat = -1, deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != -1) continue;
            std::uint64_t taken = 0;
            for (int w : mask_to_vertices(adj[static_cast<std::size_t>(v)]))
                if (color[static_cast<std::size_t>(w)] >= 0) taken |= std::uint64_t{1} << color[static_cast<std::size_t>(w)];
            const int s = std::popcount(taken);
            const int d = std::popcount(adj[static_cast<std::size_t>(v)]);
            if (s > sat || (s == sat && d > deg)) {
                pick = v;
                sat = s;
                deg = d;
            }
        }
        std::uint64_t taken = 0;
        for (int w : mask_to_vertices(adj[static_cast<std::size_t>(pick)]))
            if (color[static_cast<std::size_t>(w)] >= 0) taken |= std::uint64_t{1} << color[static_cast<std::size_t>(w)];
        const int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            if ((taken >> c) & 1) continue;
            color[static_cast<std::size_t>(pick)] = c;
            if (self(self, colored + 1, std::max(max_used, c + 1))) return true;
            color[static_cast<std::size_t>(pick)] = -1;
        }
        return false;
    };
    return dfs(dfs, 0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
    require_nonempty(g);
    if (g.order() > 25) throw FeasibilityError("chromatic_number supports at most 25 vertices");
    int chi = 1;
    for (const auto& comp : components(g)) {
        const Graph h = induced_subgraph(g, comp);
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(h.order()));
        for (int v = 0; v < h.order(); ++v) adj[static_cast<std::size_t>(v)] = h.neighbor_mask(v);
        const int lb = max_clique(adj);
        std::vector<int> verts(static_cast<std::size_t>(h.order()));
        for (int v = 0; v < h.order(); ++v) verts[static_cast<std::size_t>(v)] = v;
        int ub = greedy_colors(h, verts);
        int value = ub;
        for (int k = lb; k < ub; ++k) {
            if (k_colorable(adj, k)) {
                value = k;
                break;
            }
        }
        chi = std::max(chi, value);
    }
    return chi;
}

}  // namespace dmp
