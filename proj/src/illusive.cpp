#include "dmp/illusive.hpp"

#include <bit>
#include <cmath>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

// Degrees for a biadjacency matrix: row_deg from popcount, col_deg by column.
struct BiDegrees {
    std::vector<int> row;
    std::vector<int> col;
};

BiDegrees degrees_of(const std::vector<std::uint32_t>& mat, int cols) {
    BiDegrees d;
    d.row.resize(mat.size());
    d.col.assign(static_cast<std::size_t>(cols), 0);
    for (std::size_t i = 0; i < mat.size(); ++i) {
        d.row[i] = std::popcount(mat[i]);
        for (int j = 0; j < cols; ++j)
            if ((mat[i] >> (cols - 1 - j)) & 1) ++d.col[static_cast<std::size_t>(j)];
    }
    return d;
}

bool bit_at(std::uint32_t row, int cols, int j) { return (row >> (cols - 1 - j)) & 1; }

// Weak dominance: every row vertex's degree >= each of its column neighbors'.
// strict_somewhere reports whether some adjacent pair drops strictly.
bool rows_dominate(const std::vector<std::uint32_t>& mat, int cols, const BiDegrees& d,
                   bool* strict_somewhere = nullptr) {
    bool strict = false;
    for (std::size_t i = 0; i < mat.size(); ++i) {
        for (int j = 0; j < cols; ++j) {
            if (!bit_at(mat[i], cols, j)) continue;
            if (d.row[i] < d.col[static_cast<std::size_t>(j)]) return false;
            if (d.row[i] > d.col[static_cast<std::size_t>(j)]) strict = true;
        }
    }
    if (strict_somewhere) *strict_somewhere = strict;
    return true;
}

Graph graph_of(const std::vector<std::uint32_t>& mat, int cols) {
    const int rows = static_cast<int>(mat.size());
    Graph g(rows + cols);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (bit_at(mat[static_cast<std::size_t>(i)], cols, j)) edges.emplace_back(i, rows + j);
    return Graph::from_edges(rows + cols, edges);
}

IllusiveCandidate candidate_of(const std::vector<std::uint32_t>& mat, int cols) {
    const int rows = static_cast<int>(mat.size());
    Bipartition sides;
    for (int i = 0; i < rows; ++i) sides.left |= std::uint64_t{1} << i;
    for (int j = 0; j < cols; ++j) sides.right |= std::uint64_t{1} << (rows + j);
    return IllusiveCandidate{graph_of(mat, cols), sides};
}

bool connected(const std::vector<std::uint32_t>& mat, int cols) {
    const Graph g = graph_of(mat, cols);
    return components(g).size() == 1;
}

}  // namespace

bool is_illusive(const IllusiveCandidate& cand) {
    const auto a = mask_to_vertices(cand.sides.left);
    const auto b = mask_to_vertices(cand.sides.right);
    if (a.size() < b.size() || a.empty()) return false;
    bool strict = false;
    for (int v : a) {
        if (cand.graph.degree(v) == 0) return false;  // A has no isolated vertices
        for (int u : mask_to_vertices(cand.graph.neighbor_mask(v))) {
            if (cand.graph.degree(v) < cand.graph.degree(u)) return false;
            if (cand.graph.degree(v) > cand.graph.degree(u)) strict = true;
        }
    }
    if (a.size() == b.size()) return strict;
    return true;
}

bool for_each_sorted_biadjacency(int rows, int cols,
                                 const std::function<bool(const std::vector<std::uint32_t>&)>& visit) {
    if (rows < 1 || cols < 1 || cols > 31) throw ValidationError("bad biadjacency dimensions");
    std::vector<std::uint32_t> mat;
    mat.reserve(static_cast<std::size_t>(rows));
    // tight[j] == true while columns j and j+1 are still equal on the rows
    // chosen so far; a candidate row may not put 0 in column j and 1 in j+1
    // while the pair is tight.
    std::vector<char> tight(static_cast<std::size_t>(cols > 0 ? cols - 1 : 0), 1);

    auto rec = [&](auto&& self, std::uint32_t max_row) -> bool {
        if (static_cast<int>(mat.size()) == rows) return visit(mat);
        for (std::uint32_t r = max_row + 1; r-- > 0;) {
            bool ok = true;
            for (int j = 0; j + 1 < cols && ok; ++j)
                if (tight[static_cast<std::size_t>(j)] && !bit_at(r, cols, j) && bit_at(r, cols, j + 1))
                    ok = false;
            if (!ok) continue;
            std::vector<std::size_t> untied;
            for (int j = 0; j + 1 < cols; ++j) {
                const auto sj = static_cast<std::size_t>(j);
                if (tight[sj] && bit_at(r, cols, j) && !bit_at(r, cols, j + 1)) {
                    tight[sj] = 0;
                    untied.push_back(sj);
                }
            }
            mat.push_back(r);
            const bool keep_going = self(self, r);
            mat.pop_back();
            for (std::size_t j : untied) tight[j] = 1;
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(rec, (std::uint32_t{1} << cols) - 1);
}

std::uint64_t count_sorted_biadjacency(int rows, int cols) {
    std::uint64_t count = 0;
    for_each_sorted_biadjacency(rows, cols, [&](const auto&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<IllusiveCandidate> scan_illusive(int max_vertices) {
    if (max_vertices < 2 || max_vertices > 14)
        throw ValidationError("scan_illusive supports 2..14 vertices");
    std::optional<IllusiveCandidate> hit;
    for (int p = 1; p <= max_vertices - 1 && !hit; ++p) {
        for (int q = 1; q <= p && p + q <= max_vertices && !hit; ++q) {
            for_each_sorted_biadjacency(p, q, [&](const std::vector<std::uint32_t>& mat) {
                IllusiveCandidate cand = candidate_of(mat, q);
                if (is_illusive(cand)) {
                    hit = std::move(cand);
                    return false;
                }
                return true;
            });
        }
    }
    return hit;
}

bool check_k_kplus1(int k) {
    if (k < 1 || k > 5) throw ValidationError("check_k_kplus1 supports k in 1..5");
    bool only_complete = true;
    const std::uint32_t full_row = (std::uint32_t{1} << (k + 1)) - 1;
    for_each_sorted_biadjacency(k, k + 1, [&](const std::vector<std::uint32_t>& mat) {
        const BiDegrees d = degrees_of(mat, k + 1);
        for (int deg : d.row)
            if (deg < 1) return true;
        // strict dominance required here
        for (std::size_t i = 0; i < mat.size(); ++i)
            for (int j = 0; j < k + 1; ++j)
                if (bit_at(mat[i], k + 1, j) && d.row[i] <= d.col[static_cast<std::size_t>(j)])
                    return true;
        for (std::uint32_t row : mat) {
            if (row != full_row) {
                only_complete = false;
                return false;
            }
        }
        return true;
    });
    return only_complete;
}

bool check_balanced_regular(int max_vertices) {
    if (max_vertices < 2 || max_vertices > 12)
        throw ValidationError("check_balanced_regular supports 2..12 vertices");
    bool all_good = true;
    for (int p = 1; p <= max_vertices - 1 && all_good; ++p) {
        for (int q = 1; q <= p && p + q <= max_vertices && all_good; ++q) {
            for_each_sorted_biadjacency(p, q, [&](const std::vector<std::uint32_t>& mat) {
                const BiDegrees d = degrees_of(mat, q);
                if (!connected(mat, q)) return true;
                if (!rows_dominate(mat, q, d)) return true;
                if (p != q) {
                    all_good = false;
                    return false;
                }
                const int deg = d.row[0];
                for (int x : d.row)
                    if (x != deg) { all_good = false; return false; }
                for (int x : d.col)
                    if (x != deg) { all_good = false; return false; }
                return true;
            });
        }
    }
    return all_good;
}

MarginCheck upper_bound_margin(int k) {
    if (k < 4 || k > 20) throw ValidationError("upper_bound_margin supports k in 4..20");
    const std::int64_t pow_km1 = std::int64_t{1} << (k - 1);
    const std::int64_t pow_k = std::int64_t{1} << k;
    const std::int64_t num = (pow_km1 - 1) * (pow_k - k - 1);
    // ceil(sqrt(num / k)) without floating point: least s with k*s^2 >= num.
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(num) / k));
    while (s > 0 && k * (s - 1) * (s - 1) >= num) --s;
    while (k * s * s < num) ++s;
    const std::int64_t denom = std::int64_t{1} << ((k - 1) / 2);
    MarginCheck out;
    out.lhs = (s + denom - 1) / denom;
    out.rhs = k - (k - 1) / 2;
    out.holds = out.lhs > out.rhs || (out.lhs % 2 == 1 && out.lhs >= out.rhs);
    return out;
}

}  // namespace dmp
