#include "dmp/constructions.hpp"

#include <string_view>

#include "dmp/errors.hpp"

namespace dmp {

namespace detail {
// defined in m3_fixtures.cpp; recovered once by the exhaustive search at
// n = 7, 6, 5 with k = 3 (deterministic mode, so these are the least
// canonical codes) and committed both here and under fixtures/.
extern const std::string_view m3_fixture_n7;
extern const std::string_view m3_fixture_n6;
extern const std::string_view m3_fixture_n5;
}  // namespace detail

namespace {

void require_negative(const EdgeColoring& c, int m, const char* ctx) {
    if (verify_coloring(c, Orders(static_cast<std::size_t>(c.color_count()), m)).found)
        throw std::logic_error(std::string(ctx) + ": construction admits a required path");
}

// Disjoint union of colored blocks, all cross edges in cross_color. Blocks
// keep their internal colors; block layout follows the given order.
EdgeColoring join_blocks(const std::vector<EdgeColoring>& blocks, int cross_color) {
    int n = 0;
    for (const auto& b : blocks) n += b.order();
    if (n > Graph::kMaxVertices) throw ValidationError("joined coloring exceeds 64 vertices");
    EdgeColoring out(n, cross_color + 1);
    int off = 0;
    for (const auto& b : blocks) {
        for (int u = 0; u < b.order(); ++u)
            for (int v = u + 1; v < b.order(); ++v)
                out.set_color(off + u, off + v, b.color(u, v));
        off += b.order();
    }
    int lo = 0;
    for (const auto& b : blocks) {
        const int hi = lo + b.order();
        for (int u = lo; u < hi; ++u)
            for (int v = hi; v < n; ++v)
                out.set_color(u, v, static_cast<std::uint8_t>(cross_color));
        lo = hi;
    }
    return out;
}

std::int64_t lower_bound_size(int k, int m, int t) {
    std::int64_t pw = 1;
    for (int i = 0; i < k; ++i) {
        pw *= m - 1;
        if (pw > 4 * Graph::kMaxVertices) return pw;  // already too big
    }
    return (pw + (m - 1)) / 2 - t;
}

void check_lower_bound_args(int k, int m, int t) {
    if (k < 2) throw ValidationError("lower_bound_coloring needs k >= 2");
    if (m < 3) throw ValidationError("lower_bound_coloring needs m >= 3");
    if (t < 0 || t > m - 1) throw ValidationError("lower_bound_coloring needs 0 <= t <= m-1");
    const std::int64_t n = lower_bound_size(k, m, t);
    if (n > Graph::kMaxVertices)
        throw ValidationError("lower_bound_coloring result exceeds 64 vertices");
}

EdgeColoring lower_bound_unverified(int k, int m, int t) {
    check_lower_bound_args(k, m, t);
    if (k == 2) {
        // cliques of sizes 1..m-1 (t omitted when t >= 1): same block color 0,
        // cross color 1
        std::vector<EdgeColoring> blocks;
        for (int size = 1; size <= m - 1; ++size) {
            if (t >= 1 && size == t) continue;
            EdgeColoring clique(size, 1);  // widened to 2 colors by join_blocks
            blocks.push_back(std::move(clique));
        }
        // blocks carry k-1 = 1 color (all 0); join with cross color 1
        return join_blocks(blocks, 1);
    }
    std::vector<EdgeColoring> blocks;
    for (int j = 0; j <= m - 1; ++j) {
        if (j == m - 1 - t) continue;
        blocks.push_back(lower_bound_unverified(k - 1, m, j));
    }
    return join_blocks(blocks, k - 1);
}

}  // namespace

std::vector<int> lower_bound_blocks(int k, int m, int t) {
    check_lower_bound_args(k, m, t);
    std::vector<int> out;
    if (k == 2) {
        for (int size = 1; size <= m - 1; ++size)
            if (!(t >= 1 && size == t)) out.push_back(size);
        return out;
    }
    for (int j = 0; j <= m - 1; ++j)
        if (j != m - 1 - t) out.push_back(static_cast<int>(lower_bound_size(k - 1, m, j)));
    return out;
}

EdgeColoring lower_bound_coloring(int k, int m, int t) {
    EdgeColoring c = lower_bound_unverified(k, m, t);
    require_negative(c, m, "lower_bound_coloring");
    return c;
}

void validate_seed_set(const SeedSet& seeds) {
    if (seeds.m < 3) throw ValidationError("seed set needs m >= 3");
    if (static_cast<int>(seeds.members.size()) != seeds.m)
        throw ValidationError("seed set needs exactly m members");
    for (std::size_t i = 0; i < seeds.members.size(); ++i) {
        const auto& c = seeds.members[i];
        if (c.color_count() != seeds.k) throw ValidationError("seed member has wrong color count");
        if (c.order() != seeds.base_size() - static_cast<int>(i))
            throw ValidationError("seed sizes must be consecutive descending");
        if (verify_coloring(c, Orders(static_cast<std::size_t>(seeds.k), seeds.m)).found)
            throw ValidationError("seed member admits a required path");
    }
}

SeedSet lift_seeds(const SeedSet& seeds, int m) {
    if (m != seeds.m) throw ValidationError("lift order does not match the seed set");
    validate_seed_set(seeds);
    const int t = seeds.base_size();
    const std::int64_t q =
        static_cast<std::int64_t>(m - 1) * t - static_cast<std::int64_t>(m - 1) * (m - 2) / 2;
    if (q > Graph::kMaxVertices) throw ValidationError("lifted coloring exceeds 64 vertices");

    SeedSet out;
    out.k = seeds.k + 1;
    out.m = m;
    for (int j = 0; j <= m - 1; ++j) {
        const int omit = m - 1 - j;
        std::vector<EdgeColoring> blocks;
        for (int i = 0; i <= m - 1; ++i)
            if (i != omit) blocks.push_back(seeds.members[static_cast<std::size_t>(i)]);
        EdgeColoring lifted = join_blocks(blocks, seeds.k);
        if (lifted.order() != q - j) throw std::logic_error("lifted size mismatch");
        require_negative(lifted, m, "lift_seeds");
        out.members.push_back(std::move(lifted));
    }
    return out;
}

EdgeColoring offdiag_tight(int m) {
    if (m < 3) throw ValidationError("offdiag_tight needs m >= 3");
    const int n = 2 * m - 3;
    if (n > Graph::kMaxVertices) throw ValidationError("offdiag_tight result exceeds 64 vertices");
    EdgeColoring c(n, 2);
    const int a = m - 1;  // vertices 0..a-1 one clique, a..n-1 the other
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            c.set_color(u, v, static_cast<std::uint8_t>((u < a) != (v < a) ? 1 : 0));
    if (auto found = verify_coloring(c, {m, 3}); found.found)
        throw std::logic_error("offdiag_tight: construction admits a required path");
    return c;
}

SeedSet m3_family(int k) {
    if (k < 3 || k > 6) throw ValidationError("m3_family supports k in 3..6");
    if (k == 3) {
        SeedSet out;
        out.k = 3;
        out.m = 3;
        out.members.push_back(parse_coloring(detail::m3_fixture_n7));
        out.members.push_back(parse_coloring(detail::m3_fixture_n6));
        out.members.push_back(parse_coloring(detail::m3_fixture_n5));
        validate_seed_set(out);
        return out;
    }
    return lift_seeds(m3_family(k - 1), 3);
}

}  // namespace dmp
