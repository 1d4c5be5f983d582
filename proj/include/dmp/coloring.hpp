#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmp/graph.hpp"
#include "dmp/paths.hpp"

namespace dmp {

/// Required monochromatic path orders, one per color.
using Orders = std::vector<int>;

/// A k-coloring of every edge slot of K_n. Slots are stored in lexicographic
/// pair order (0,1),(0,2),...,(n-2,n-1), the same order the text format uses.
class EdgeColoring {
public:
    EdgeColoring() = default;
    EdgeColoring(int n, int k);
    EdgeColoring(int n, int k, std::vector<std::uint8_t> slots);

    static std::size_t slot_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }
    static std::size_t slot_index(int n, int u, int v);

    int order() const { return n_; }
    int color_count() const { return k_; }
    std::size_t slot_count() const { return slots_.size(); }
    std::uint8_t color(int u, int v) const { return slots_[slot_index(n_, u, v)]; }
    void set_color(int u, int v, std::uint8_t c);
    const std::vector<std::uint8_t>& slots() const { return slots_; }

    bool operator==(const EdgeColoring&) const = default;

private:
    int n_ = 1;
    int k_ = 1;
    std::vector<std::uint8_t> slots_;
};

/// Outcome of checking a coloring against required orders: the least color j
/// holding a monotone path of order >= orders[j], with the witness, or
/// nothing when every color falls short.
struct ColoringVerdict {
    std::optional<std::pair<int, DegreeMonotonePath>> found;
};

/// Spanning subgraph on all n vertices containing exactly the edges colored
/// j. Isolated vertices are kept: path degrees are measured here.
Graph color_subgraph(const EdgeColoring& c, int j);

/// Looks for a monochromatic degree-monotone path of the required order in
/// some color, scanning colors in ascending order. Witnesses are re-checked
/// against the spanning subgraph before being returned.
ColoringVerdict verify_coloring(const EdgeColoring& c, const Orders& orders);

/// Relabels vertices: in the result, slot {perm[u],perm[v]} carries the
/// color of {u,v}.
EdgeColoring permuted(const EdgeColoring& c, const std::vector<int>& perm);

/// Applies a color relabeling: new color of a slot is color_map[old].
EdgeColoring recolored(const EdgeColoring& c, const std::vector<int>& color_map);

// Text format: header "kcoloring <n> <k>", then exactly n(n-1)/2 lines
// "<u> <v> <c>" with u < v; canonical files list slots in lexicographic
// order and serialization always emits that order, byte for byte.
EdgeColoring parse_coloring(std::string_view text);
std::string serialize_coloring(const EdgeColoring& c);
EdgeColoring load_coloring(const std::filesystem::path& path);
void save_coloring(const EdgeColoring& c, const std::filesystem::path& path);

void validate_orders(const Orders& orders, int k);

}  // namespace dmp
