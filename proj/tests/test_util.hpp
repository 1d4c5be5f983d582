#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "dmp/graph.hpp"

namespace testutil {

inline dmp::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return dmp::Graph::from_edges(n, edges);
}

// Independent oracle: bipartite iff some of the 2^n side assignments has
// every edge crossing.
inline bool brute_bipartite(const dmp::Graph& g) {
    const int n = g.order();
    const auto edges = g.edges();
    for (std::uint64_t sides = 0; sides < (std::uint64_t{1} << n); ++sides) {
        bool ok = true;
        for (const auto& [u, v] : edges)
            if (((sides >> u) & 1) == ((sides >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return n == 0;
}

// Independent oracle: proper k-colorability by raw enumeration.
inline bool brute_colorable(const dmp::Graph& g, int k) {
    const int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (self(self, v + 1)) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int cycles_of_perm_on_pairs(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(static_cast<std::size_t>(n * n), 0);
    int cycles = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (seen[static_cast<std::size_t>(u * n + v)]) continue;
            ++cycles;
            int a = u, b = v;
            while (!seen[static_cast<std::size_t>(std::min(a, b) * n + std::max(a, b))]) {
                seen[static_cast<std::size_t>(std::min(a, b) * n + std::max(a, b))] = 1;
                const int na = perm[static_cast<std::size_t>(a)];
                const int nb = perm[static_cast<std::size_t>(b)];
                a = na;
                b = nb;
            }
        }
    }
    return cycles;
}

// Orbit count of graphs on n labeled vertices under S_n (Burnside).
inline std::uint64_t burnside_graph_count(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long double total = 0;
    std::uint64_t nfact = 0;
    do {
        total += std::pow(2.0L, cycles_of_perm_on_pairs(perm));
        ++nfact;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<std::uint64_t>(total / nfact + 0.5L);
}

// Orbit count of p x q binary matrices under independent row/column
// permutations: cell orbits under (sigma, tau) number sum over cycle pairs
// of gcd of lengths.
inline std::uint64_t burnside_bimatrix_count(int p, int q) {
    auto cycle_lengths = [](const std::vector<int>& perm) {
        std::vector<int> lens;
        std::vector<char> seen(perm.size(), 0);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        return lens;
    };
    std::vector<int> sigma(static_cast<std::size_t>(p)), tau0(static_cast<std::size_t>(q));
    std::iota(sigma.begin(), sigma.end(), 0);
    long double total = 0;
    std::uint64_t denom = 0;
    do {
        const auto ls = cycle_lengths(sigma);
        std::vector<int> tau = tau0;
        std::iota(tau.begin(), tau.end(), 0);
        do {
            const auto lt = cycle_lengths(tau);
            int orbits = 0;
            for (int a : ls)
                for (int b : lt) orbits += std::gcd(a, b);
            total += std::pow(2.0L, orbits);
            ++denom;
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return static_cast<std::uint64_t>(total / denom + 0.5L);
}

inline dmp::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);                    // outer cycle
        edges.emplace_back(i, i + 5);                          // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);            // inner pentagram
    }
    std::vector<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (std::find(dedup.begin(), dedup.end(), std::pair(u, v)) == dedup.end())
            dedup.emplace_back(u, v);
    }
    return dmp::Graph::from_edges(10, dedup);
}

}  // namespace testutil
