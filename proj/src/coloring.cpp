#include "dmp/coloring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dmp/errors.hpp"

namespace dmp {

EdgeColoring::EdgeColoring(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > Graph::kMaxVertices) throw ValidationError("coloring order outside 1..64");
    if (k < 1 || k > 255) throw ValidationError("color count outside 1..255");
    slots_.assign(slot_count(n), 0);
}

EdgeColoring::EdgeColoring(int n, int k, std::vector<std::uint8_t> slots) : EdgeColoring(n, k) {
    if (slots.size() != slot_count(n)) throw ValidationError("slot vector has wrong length");
    for (std::uint8_t c : slots)
        if (c >= k) throw ValidationError("slot color out of range");
    slots_ = std::move(slots);
}

std::size_t EdgeColoring::slot_index(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v) throw ValidationError("bad slot pair");
    const auto su = static_cast<std::size_t>(u);
    return su * (2 * static_cast<std::size_t>(n) - su - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

void EdgeColoring::set_color(int u, int v, std::uint8_t c) {
    if (c >= k_) throw ValidationError("color out of range");
    slots_[slot_index(n_, u, v)] = c;
}

Graph color_subgraph(const EdgeColoring& c, int j) {
    if (j < 0 || j >= c.color_count()) throw ValidationError("color out of range");
    Graph g(c.order());
    std::size_t s = 0;
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v, ++s)
            if (c.slots()[s] == j) g.add_edge_unchecked(u, v);
    return g;
}

void validate_orders(const Orders& orders, int k) {
    if (static_cast<int>(orders.size()) != k)
        throw ValidationError("orders vector length must equal color count");
    for (int m : orders)
        if (m < 1) throw ValidationError("required order must be >= 1");
}

ColoringVerdict verify_coloring(const EdgeColoring& c, const Orders& orders) {
    validate_orders(orders, c.color_count());
    for (int j = 0; j < c.color_count(); ++j) {
        const Graph gj = color_subgraph(c, j);
        if (auto path = has_mdm(gj, orders[static_cast<std::size_t>(j)])) {
            if (!is_valid_witness(gj, *path)) throw std::logic_error("invalid mdm witness");
            return ColoringVerdict{std::pair(j, std::move(*path))};
        }
    }
    return ColoringVerdict{};
}

EdgeColoring permuted(const EdgeColoring& c, const std::vector<int>& perm) {
    const int n = c.order();
    if (static_cast<int>(perm.size()) != n) throw ValidationError("permutation length mismatch");
    EdgeColoring out(n, c.color_count());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            out.set_color(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)],
                          c.color(u, v));
    return out;
}

EdgeColoring recolored(const EdgeColoring& c, const std::vector<int>& color_map) {
    if (static_cast<int>(color_map.size()) != c.color_count())
        throw ValidationError("color map length mismatch");
    std::vector<std::uint8_t> slots = c.slots();
    for (auto& s : slots) s = static_cast<std::uint8_t>(color_map[s]);
    return EdgeColoring(c.order(), c.color_count(), std::move(slots));
}

EdgeColoring parse_coloring(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<int> filled;   // line number that set each slot, 0 = unset
    std::vector<std::uint8_t> slots;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "kcoloring") {
            if (n != -1) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n >> k) || n < 1 || n > Graph::kMaxVertices || k < 1 || k > 255)
                throw ParseError(lineno, "malformed header");
            filled.assign(EdgeColoring::slot_count(n), 0);
            slots.assign(EdgeColoring::slot_count(n), 0);
        } else {
            if (n == -1) throw ParseError(lineno, "slot before header");
            int u, v, c;
            std::istringstream reread(line);
            if (!(reread >> u >> v >> c)) throw ParseError(lineno, "malformed slot line");
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "endpoint out of range");
            if (u >= v) throw ParseError(lineno, "slot endpoints must satisfy u < v");
            if (c < 0 || c >= k) throw ParseError(lineno, "color out of range");
            const std::size_t s = EdgeColoring::slot_index(n, u, v);
            if (filled[s]) throw ParseError(lineno, "duplicate slot (first at line " +
                                                        std::to_string(filled[s]) + ")");
            filled[s] = lineno;
            slots[s] = static_cast<std::uint8_t>(c);
            std::string extra;
            if (reread >> extra && extra[0] != '#') throw ParseError(lineno, "trailing tokens");
        }
    }
    if (n == -1) throw ParseError(lineno, "missing 'kcoloring <n> <k>' header");
    for (std::size_t s = 0; s < filled.size(); ++s)
        if (!filled[s]) throw ParseError(lineno, "missing slot #" + std::to_string(s));
    return EdgeColoring(n, k, std::move(slots));
}

std::string serialize_coloring(const EdgeColoring& c) {
    std::ostringstream out;
    out << "kcoloring " << c.order() << " " << c.color_count() << "\n";
    std::size_t s = 0;
    for (int u = 0; u < c.order(); ++u)
        for (int v = u + 1; v < c.order(); ++v, ++s)
            out << u << " " << v << " " << static_cast<int>(c.slots()[s]) << "\n";
    return out.str();
}

EdgeColoring load_coloring(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coloring(buf.str());
}

void save_coloring(const EdgeColoring& c, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << serialize_coloring(c);
}

}  // namespace dmp
