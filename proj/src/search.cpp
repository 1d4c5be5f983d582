#include "dmp/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "dmp/errors.hpp"

namespace dmp {

namespace {

constexpr int kMaxColors = 8;

struct PairTable {
    int n = 0;
    int slots = 0;
    std::vector<std::pair<int, int>> pair_of;
    std::vector<std::vector<int>> slot_of;

    explicit PairTable(int n_) : n(n_), slots(static_cast<int>(EdgeColoring::slot_count(n_))) {
        pair_of.reserve(static_cast<std::size_t>(slots));
        slot_of.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const int s = static_cast<int>(pair_of.size());
                pair_of.emplace_back(u, v);
                slot_of[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = s;
                slot_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = s;
            }
        }
    }
};

std::vector<std::vector<std::uint8_t>> allowed_color_perms(int k, CanonMode mode,
                                                           const Orders& orders) {
    std::vector<std::uint8_t> identity(static_cast<std::size_t>(k));
    std::iota(identity.begin(), identity.end(), 0);
    if (mode == CanonMode::VertexOnly || k == 1) return {identity};
    if (k > 6) throw FeasibilityError("color symmetry enumeration supports at most 6 colors");
    std::vector<int> group(static_cast<std::size_t>(k), 0);
    if (!orders.empty()) {
        validate_orders(orders, k);
        for (int j = 0; j < k; ++j) group[static_cast<std::size_t>(j)] = orders[static_cast<std::size_t>(j)];
    }
    std::vector<std::vector<std::uint8_t>> out;
    std::vector<std::uint8_t> perm = identity;
    do {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j)
            ok = group[perm[static_cast<std::size_t>(j)]] == group[static_cast<std::size_t>(j)];
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Exact lexicographic minimization over vertex permutations and a fixed set
// of color permutations. The DFS picks the original vertex for each new
// label in turn; after level j the string prefix (0,1)..(0,j) is determined,
// which gives the branch-and-bound its pruning, and leaves are compared in
// full.
class Canonizer {
public:
    Canonizer(const PairTable& pt, int k, CanonMode mode, const Orders& orders)
        : pt_(pt), k_(k), perms_(allowed_color_perms(k, mode, orders)) {}

    std::vector<std::uint8_t> minimize(const std::vector<std::uint8_t>& s) {
        run(s, /*stop_on_smaller=*/false);
        return best_;
    }

    bool is_min(const std::vector<std::uint8_t>& s) {
        run(s, /*stop_on_smaller=*/true);
        return !found_smaller_;
    }

private:
    void run(const std::vector<std::uint8_t>& s, bool stop_on_smaller) {
        src_ = &s;
        best_ = s;
        stop_on_smaller_ = stop_on_smaller;
        found_smaller_ = false;
        const int n = pt_.n;
        w_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), 0);
        scratch_.resize(s.size());
        for (const auto& rho : perms_) {
            rho_ = &rho;
            dfs(0, false);
            if (found_smaller_ && stop_on_smaller_) return;
        }
    }

    void dfs(int level, bool lt) {
        const int n = pt_.n;
        if (found_smaller_ && stop_on_smaller_) return;
        if (stop_on_smaller_ && lt) {
            // strictly smaller on a fully determined prefix: decided
            found_smaller_ = true;
            return;
        }
        if (level == n) {
            leaf(lt);
            return;
        }
        // candidates ordered by prefix value so small strings are tried first
        for (int want = 0; want < (level == 0 ? 1 : k_); ++want) {
            for (int cand = 0; cand < n; ++cand) {
                if (used_[static_cast<std::size_t>(cand)]) continue;
                bool next_lt = lt;
                if (level > 0) {
                    const int slot = pt_.slot_of[static_cast<std::size_t>(w_[0])][static_cast<std::size_t>(cand)];
                    const int val = (*rho_)[(*src_)[static_cast<std::size_t>(slot)]];
                    if (val != want) continue;
                    if (!lt) {
                        const int ref = best_[static_cast<std::size_t>(level - 1)];
                        if (val > ref) continue;  // every candidate with this value loses
                        if (val < ref) next_lt = true;
                    }
                }
                w_[static_cast<std::size_t>(level)] = cand;
                used_[static_cast<std::size_t>(cand)] = 1;
                dfs(level + 1, next_lt);
                used_[static_cast<std::size_t>(cand)] = 0;
                if (found_smaller_ && stop_on_smaller_) return;
            }
        }
    }

    void leaf(bool lt) {
        const int n = pt_.n;
        std::size_t s = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++s) {
                const int slot = pt_.slot_of[static_cast<std::size_t>(w_[static_cast<std::size_t>(u)])]
                                            [static_cast<std::size_t>(w_[static_cast<std::size_t>(v)])];
                scratch_[s] = (*rho_)[(*src_)[static_cast<std::size_t>(slot)]];
            }
        if (lt || scratch_ < best_) {
            if (stop_on_smaller_) {
                found_smaller_ = true;
            } else if (scratch_ < best_) {
                best_ = scratch_;
            }
        }
    }

    const PairTable& pt_;
    int k_;
    std::vector<std::vector<std::uint8_t>> perms_;
    const std::vector<std::uint8_t>* src_ = nullptr;
    const std::vector<std::uint8_t>* rho_ = nullptr;
    std::vector<std::uint8_t> best_, scratch_;
    std::vector<int> w_;
    std::vector<char> used_;
    bool stop_on_smaller_ = false;
    bool found_smaller_ = false;
};

// A vertex transposition or color swap lifted to edge slots.
struct SlotSym {
    std::vector<int> slot_map;
    std::array<std::uint8_t, kMaxColors> color_map{};
};

std::vector<SlotSym> build_sym_family(const PairTable& pt, int k, const Orders& orders,
                                      CanonMode mode) {
    std::vector<SlotSym> out;
    std::vector<int> ident(static_cast<std::size_t>(pt.slots));
    std::iota(ident.begin(), ident.end(), 0);
    SlotSym base;
    base.slot_map = ident;
    for (int c = 0; c < k; ++c) base.color_map[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(c);

    for (int a = 0; a < pt.n; ++a) {
        for (int b = a + 1; b < pt.n; ++b) {
            SlotSym sym = base;
            for (int s = 0; s < pt.slots; ++s) {
                auto [u, v] = pt.pair_of[static_cast<std::size_t>(s)];
                const int pu = u == a ? b : (u == b ? a : u);
                const int pv = v == a ? b : (v == b ? a : v);
                sym.slot_map[static_cast<std::size_t>(s)] =
                    pt.slot_of[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)];
            }
            out.push_back(std::move(sym));
        }
    }
    if (mode == CanonMode::VertexAndEqualOrderColors) {
        for (int c = 0; c < k; ++c) {
            for (int d = c + 1; d < k; ++d) {
                if (!orders.empty() &&
                    orders[static_cast<std::size_t>(c)] != orders[static_cast<std::size_t>(d)])
                    continue;
                SlotSym sym = base;
                sym.color_map[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(d);
                sym.color_map[static_cast<std::size_t>(d)] = static_cast<std::uint8_t>(c);
                out.push_back(std::move(sym));
            }
        }
    }
    return out;
}

// Union-find with edge parity per color, rollback via trail (no path
// compression so undo is exact).
class ParityForest {
public:
    ParityForest(int k, int n) : n_(n) {
        par_.resize(static_cast<std::size_t>(k * n));
        std::iota(par_.begin(), par_.end(), 0);
        parity_.assign(par_.size(), 0);
        rank_.assign(par_.size(), 0);
    }

    // false iff adding edge {u,v} in color c closes an odd cycle
    bool add_edge(int c, int u, int v) {
        auto [ru, pu] = find(c * n_ + u);
        auto [rv, pv] = find(c * n_ + v);
        if (ru == rv) return (pu ^ pv) == 1;
        if (rank_[static_cast<std::size_t>(ru)] > rank_[static_cast<std::size_t>(rv)]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        trail_.push_back({ru, rv, rank_[static_cast<std::size_t>(rv)]});
        par_[static_cast<std::size_t>(ru)] = rv;
        parity_[static_cast<std::size_t>(ru)] = static_cast<std::uint8_t>(pu ^ pv ^ 1);
        if (rank_[static_cast<std::size_t>(ru)] == rank_[static_cast<std::size_t>(rv)])
            ++rank_[static_cast<std::size_t>(rv)];
        return true;
    }

    std::size_t mark() const { return trail_.size(); }

    void rollback(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto [a, b, rb] = trail_.back();
            trail_.pop_back();
            par_[static_cast<std::size_t>(a)] = a;
            parity_[static_cast<std::size_t>(a)] = 0;
            rank_[static_cast<std::size_t>(b)] = rb;
        }
    }

private:
    std::pair<int, int> find(int idx) const {
        int p = 0;
        while (par_[static_cast<std::size_t>(idx)] != idx) {
            p ^= parity_[static_cast<std::size_t>(idx)];
            idx = par_[static_cast<std::size_t>(idx)];
        }
        return {idx, p};
    }

    struct Undo {
        int child, parent, old_rank;
    };
    int n_;
    std::vector<int> par_;
    std::vector<std::uint8_t> parity_;
    std::vector<int> rank_;
    std::vector<Undo> trail_;
};

struct SharedState {
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::mutex mtx;
    std::optional<EdgeColoring> counterexample;          // first hit
    std::optional<std::vector<std::uint8_t>> best_code;  // deterministic: least code
};

// One depth-first enumeration over slot assignments in lexicographic slot
// order. Prefix rejection: a symmetry image that is strictly smaller on a
// fully determined prefix proves no completion is canonical. Each symmetry
// keeps a pointer to the first string position not yet verified equal;
// pointers only move forward along a branch and are restored via a trail.
class Engine {
public:
    Engine(const SearchQuery& q, const PairTable& pt, const std::vector<SlotSym>& syms,
           bool exact_classes, SharedState* shared,
           std::chrono::steady_clock::time_point deadline, bool has_deadline)
        : q_(q),
          pt_(pt),
          syms_(syms),
          exact_classes_(exact_classes),
          shared_(shared),
          deadline_(deadline),
          has_deadline_(has_deadline),
          forest_(q.k, q.n),
          canon_(pt, q.k, CanonMode::VertexAndEqualOrderColors, q.orders) {
        colors_.assign(static_cast<std::size_t>(pt.slots), 0);
        sym_state_.assign(syms.size(), 0);
    }

    void apply_prefix(const std::vector<std::uint8_t>& prefix) {
        for (std::uint8_t c : prefix) {
            colors_[static_cast<std::size_t>(cnt_)] = c;
            ++cnt_;
            if (q_.options.prune_bipartite) {
                const auto [u, v] = pt_.pair_of[static_cast<std::size_t>(cnt_ - 1)];
                if (!forest_.add_edge(c, u, v)) throw std::logic_error("prefix not viable");
            }
            if (!advance_syms()) throw std::logic_error("prefix not viable");
        }
    }

    // true iff the prefix survives the same checks dfs applies
    bool try_prefix(const std::vector<std::uint8_t>& prefix) {
        for (std::uint8_t c : prefix) {
            colors_[static_cast<std::size_t>(cnt_)] = c;
            ++cnt_;
            if (q_.options.prune_bipartite) {
                const auto [u, v] = pt_.pair_of[static_cast<std::size_t>(cnt_ - 1)];
                if (!forest_.add_edge(c, u, v)) return false;
            }
            if (!advance_syms()) return false;
        }
        return true;
    }

    void run() { dfs(); }

    SearchStats& stats() { return stats_; }

private:
    bool should_stop() {
        if (shared_->stop.load(std::memory_order_relaxed)) return true;
        if (has_deadline_ && (stats_.nodes & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline_) {
            shared_->budget_hit.store(true);
            shared_->stop.store(true);
            return true;
        }
        return false;
    }

    bool advance_syms() {
        for (std::size_t si = 0; si < syms_.size(); ++si) {
            int p = sym_state_[si];
            if (p < 0) continue;
            const int start = p;
            const auto& sym = syms_[si];
            bool fire = false;
            while (p < cnt_) {
                const int src = sym.slot_map[static_cast<std::size_t>(p)];
                if (src >= cnt_) break;
                const std::uint8_t vt = sym.color_map[colors_[static_cast<std::size_t>(src)]];
                const std::uint8_t vo = colors_[static_cast<std::size_t>(p)];
                if (vt < vo) {
                    fire = true;
                    break;
                }
                if (vt > vo) {
                    p = -1;
                    break;
                }
                ++p;
            }
            if (p != start) {
                sym_trail_.push_back({static_cast<int>(si), start});
                sym_state_[si] = p;
            }
            if (fire) return false;
        }
        return true;
    }

    void rollback(std::size_t sym_mark, std::size_t uf_mark) {
        while (sym_trail_.size() > sym_mark) {
            const auto [si, old] = sym_trail_.back();
            sym_trail_.pop_back();
            sym_state_[static_cast<std::size_t>(si)] = old;
        }
        forest_.rollback(uf_mark);
    }

    // false propagates an abort (stop flag / budget) up the recursion
    bool dfs() {
        if (cnt_ == pt_.slots) {
            on_leaf();
            return !shared_->stop.load(std::memory_order_relaxed);
        }
        if (should_stop()) return false;
        const auto [u, v] = pt_.pair_of[static_cast<std::size_t>(cnt_)];
        for (int x = 0; x < q_.k; ++x) {
            ++stats_.nodes;
            const std::size_t sym_mark = sym_trail_.size();
            const std::size_t uf_mark = forest_.mark();
            colors_[static_cast<std::size_t>(cnt_)] = static_cast<std::uint8_t>(x);
            ++cnt_;
            bool viable = true;
            if (q_.options.prune_bipartite && !forest_.add_edge(x, u, v)) {
                viable = false;
                ++stats_.pruned_bipartite;
            }
            if (viable && !advance_syms()) {
                viable = false;
                ++stats_.pruned_canonical;
            }
            if (viable && !dfs()) {
                rollback(sym_mark, uf_mark);
                --cnt_;
                return false;
            }
            rollback(sym_mark, uf_mark);
            --cnt_;
        }
        return true;
    }

    void on_leaf() {
        ++stats_.leaves;
        if (exact_classes_ && canon_.is_min(colors_)) ++stats_.canonical_classes;
        EdgeColoring c(q_.n, q_.k, colors_);
        if (verify_coloring(c, q_.orders).found) return;
        // counterexample
        std::lock_guard<std::mutex> lock(shared_->mtx);
        if (q_.options.deterministic) {
            auto code = canon_.minimize(colors_);
            if (!shared_->best_code || code < *shared_->best_code) {
                shared_->best_code = std::move(code);
                shared_->counterexample = EdgeColoring(q_.n, q_.k, *shared_->best_code);
            }
        } else {
            if (!shared_->counterexample) shared_->counterexample = std::move(c);
            shared_->stop.store(true);
        }
    }

    const SearchQuery& q_;
    const PairTable& pt_;
    const std::vector<SlotSym>& syms_;
    bool exact_classes_;
    SharedState* shared_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;

    std::vector<std::uint8_t> colors_;
    int cnt_ = 0;
    std::vector<int> sym_state_;
    std::vector<std::pair<int, int>> sym_trail_;
    ParityForest forest_;
    Canonizer canon_;
    SearchStats stats_;
};

void validate_query(const SearchQuery& q) {
    if (q.n < 2 || q.n > Graph::kMaxVertices) throw ValidationError("search needs 2 <= n <= 64");
    if (q.k < 1 || q.k > kMaxColors) throw ValidationError("search needs 1 <= k <= 8");
    validate_orders(q.orders, q.k);
    if (q.options.prune_bipartite)
        for (int m : q.orders)
            if (m != 3) throw ValidationError("bipartite pruning is valid only for orders all 3");
    if (q.options.workers < 1) throw ValidationError("worker count must be >= 1");
}

double estimated_classes(const SearchQuery& q) {
    const double slots = static_cast<double>(EdgeColoring::slot_count(q.n));
    double denom = 1.0;
    for (int i = 2; i <= q.n; ++i) denom *= i;
    // color symmetry: product of factorials of equal-order groups
    Orders sorted = q.orders;
    std::sort(sorted.begin(), sorted.end());
    double run = 1.0;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
            run += 1.0;
        } else {
            for (double f = 2.0; f <= run; f += 1.0) denom *= f;
            run = 1.0;
        }
    }
    return std::pow(static_cast<double>(q.k), slots) / denom;
}

// Expands surviving prefixes breadth-first until there are enough tasks to
// keep the pool busy.
std::vector<std::vector<std::uint8_t>> make_tasks(const SearchQuery& q, const PairTable& pt,
                                                  const std::vector<SlotSym>& syms, int target) {
    std::vector<std::vector<std::uint8_t>> cur{{}};
    int depth = 0;
    const int max_depth = std::min(pt.slots, 14);
    SharedState dummy;
    while (static_cast<int>(cur.size()) < target && depth < max_depth) {
        std::vector<std::vector<std::uint8_t>> next;
        for (const auto& prefix : cur) {
            for (int x = 0; x < q.k; ++x) {
                std::vector<std::uint8_t> ext = prefix;
                ext.push_back(static_cast<std::uint8_t>(x));
                Engine probe(q, pt, syms, false, &dummy, {}, false);
                if (probe.try_prefix(ext)) next.push_back(std::move(ext));
            }
        }
        cur = std::move(next);
        ++depth;
        if (cur.empty()) break;
    }
    return cur;
}

}  // namespace

CanonicalCode canonical_form(const EdgeColoring& c, CanonMode mode, const Orders& orders) {
    if (c.order() > 12) throw FeasibilityError("canonical_form supports at most 12 vertices");
    PairTable pt(c.order());
    Canonizer canon(pt, c.color_count(), mode, orders);
    return CanonicalCode{canon.minimize(c.slots())};
}

bool is_canonical(const EdgeColoring& c, CanonMode mode, const Orders& orders) {
    if (c.order() > 12) throw FeasibilityError("is_canonical supports at most 12 vertices");
    PairTable pt(c.order());
    Canonizer canon(pt, c.color_count(), mode, orders);
    return canon.is_min(c.slots());
}

CanonicalCode graph_code(const Graph& g) {
    if (g.order() < 1) throw ValidationError("graph_code needs at least one vertex");
    EdgeColoring c(g.order(), 2);
    for (const auto& [u, v] : g.edges()) c.set_color(u, v, 1);
    return canonical_form(c, CanonMode::VertexOnly);
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.order() <= 1) return true;
    if (a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return graph_code(a) == graph_code(b);
}

SearchOutcome decide(const SearchQuery& q) {
    validate_query(q);
    if (q.options.brute) return decide_brute(q);
    const auto t0 = std::chrono::steady_clock::now();
    if (!q.options.budget_seconds && estimated_classes(q) > static_cast<double>(q.options.class_budget))
        throw FeasibilityError(
            "estimated class count exceeds the budget; pass a wall-clock budget to attempt anyway");

    const PairTable pt(q.n);
    const auto syms = build_sym_family(pt, q.k, q.orders, CanonMode::VertexAndEqualOrderColors);
    const bool exact_classes = q.options.exact_class_stats.value_or(q.n <= 8);

    SharedState shared;
    auto deadline = t0;
    const bool has_deadline = q.options.budget_seconds.has_value();
    if (has_deadline)
        deadline = t0 + std::chrono::microseconds(
                            static_cast<std::int64_t>(*q.options.budget_seconds * 1e6));

    SearchStats total;
    if (q.options.workers == 1) {
        Engine engine(q, pt, syms, exact_classes, &shared, deadline, has_deadline);
        engine.run();
        total = engine.stats();
    } else {
        auto tasks = make_tasks(q, pt, syms, q.options.workers * 24);
        if (tasks.empty()) throw std::logic_error("prefix expansion lost every branch");
        std::atomic<std::size_t> next{0};
        std::mutex stats_mtx;
        auto worker = [&]() {
            SearchStats local;
            while (!shared.stop.load(std::memory_order_relaxed)) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                Engine engine(q, pt, syms, exact_classes, &shared, deadline, has_deadline);
                engine.apply_prefix(tasks[i]);
                engine.run();
                local.nodes += engine.stats().nodes;
                local.leaves += engine.stats().leaves;
                local.canonical_classes += engine.stats().canonical_classes;
                local.pruned_canonical += engine.stats().pruned_canonical;
                local.pruned_bipartite += engine.stats().pruned_bipartite;
            }
            std::lock_guard<std::mutex> lock(stats_mtx);
            total.nodes += local.nodes;
            total.leaves += local.leaves;
            total.canonical_classes += local.canonical_classes;
            total.pruned_canonical += local.pruned_canonical;
            total.pruned_bipartite += local.pruned_bipartite;
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < q.options.workers; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchOutcome out;
    out.stats = total;
    out.stats.completed = !shared.budget_hit.load();
    out.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (shared.counterexample) {
        out.verdict = SearchVerdict::Counterexample;
        out.counterexample = std::move(shared.counterexample);
    } else if (shared.budget_hit.load()) {
        out.verdict = SearchVerdict::BudgetExceeded;
    } else {
        out.verdict = SearchVerdict::AllGood;
    }
    return out;
}

SearchOutcome decide_brute(const SearchQuery& q) {
    validate_query(q);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t S = EdgeColoring::slot_count(q.n);
    const double raw = std::pow(static_cast<double>(q.k), static_cast<double>(S));
    if (raw > static_cast<double>(1 << 24))
        throw FeasibilityError("decide_brute supports at most 2^24 raw colorings");

    SearchOutcome out;
    std::vector<std::uint8_t> slots(S, 0);
    const auto total = static_cast<std::uint64_t>(raw);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t t = x;
        for (std::size_t s = 0; s < S; ++s) {
            slots[s] = static_cast<std::uint8_t>(t % q.k);
            t /= q.k;
        }
        ++out.stats.nodes;
        EdgeColoring c(q.n, q.k, slots);
        if (!verify_coloring(c, q.orders).found) {
            out.verdict = SearchVerdict::Counterexample;
            out.counterexample = std::move(c);
            break;
        }
    }
    out.stats.leaves = out.stats.nodes;
    out.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::vector<ScanRow> scan(int k, int m, int n_lo, int n_hi, const SearchOptions& options,
                          const std::function<void(const ScanRow&)>& on_row) {
    if (n_lo > n_hi) throw ValidationError("empty scan range");
    std::vector<ScanRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        ScanRow row;
        row.n = n;
        SearchQuery q{n, k, Orders(static_cast<std::size_t>(k), m), options};
        try {
            row.outcome = decide(q);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        if (on_row) on_row(row);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t count_classes_orbit(int n, int k, CanonMode mode, const Orders& orders) {
    if (n < 2 || n > 10) throw FeasibilityError("count_classes_orbit supports 2 <= n <= 10");
    const PairTable pt(n);
    const auto rhos = allowed_color_perms(k, mode, orders);

    // fix_by_len[r][L]: colors fixed by the r-th permutation iterated L times
    const int S = pt.slots;
    std::vector<std::vector<int>> fix_by_len(rhos.size(), std::vector<int>(static_cast<std::size_t>(S + 1), 0));
    for (std::size_t r = 0; r < rhos.size(); ++r) {
        std::vector<std::uint8_t> power(rhos[r].size());
        std::iota(power.begin(), power.end(), 0);
        for (int len = 1; len <= S; ++len) {
            std::vector<std::uint8_t> next(power.size());
            for (std::size_t c = 0; c < power.size(); ++c) next[c] = rhos[r][power[c]];
            power = std::move(next);
            int fixed = 0;
            for (std::size_t c = 0; c < power.size(); ++c)
                if (power[c] == static_cast<std::uint8_t>(c)) ++fixed;
            fix_by_len[r][static_cast<std::size_t>(len)] = fixed;
        }
    }

    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    unsigned __int128 total = 0;
    std::uint64_t group = 0;
    std::vector<int> slot_image(static_cast<std::size_t>(S));
    std::vector<char> seen(static_cast<std::size_t>(S));
    std::vector<int> cycle_lens;
    do {
        for (int s = 0; s < S; ++s) {
            const auto [u, v] = pt.pair_of[static_cast<std::size_t>(s)];
            slot_image[static_cast<std::size_t>(s)] =
                pt.slot_of[static_cast<std::size_t>(sigma[static_cast<std::size_t>(u)])]
                          [static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])];
        }
        std::fill(seen.begin(), seen.end(), 0);
        cycle_lens.clear();
        for (int s = 0; s < S; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            int len = 0;
            for (int t = s; !seen[static_cast<std::size_t>(t)]; t = slot_image[static_cast<std::size_t>(t)]) {
                seen[static_cast<std::size_t>(t)] = 1;
                ++len;
            }
            cycle_lens.push_back(len);
        }
        for (std::size_t r = 0; r < rhos.size(); ++r) {
            unsigned __int128 term = 1;
            for (int len : cycle_lens) term *= static_cast<unsigned>(fix_by_len[r][static_cast<std::size_t>(len)]);
            total += term;
            ++group;
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return static_cast<std::uint64_t>(total / group);
}

std::uint64_t count_classes(int n, int k, CanonMode mode) {
    if (n < 2 || n > 8) throw FeasibilityError("count_classes supports 2 <= n <= 8");
    SearchQuery q;
    q.n = n;
    q.k = k;
    q.orders.assign(static_cast<std::size_t>(k), 3);
    const PairTable pt(n);
    const auto syms = build_sym_family(pt, k, q.orders, mode);
    SharedState shared;
    Canonizer canon(pt, k, mode, q.orders);

    // same generation loop as decide, but leaves only feed the exact counter
    std::uint64_t classes = 0;
    std::vector<std::uint8_t> colors(pt.slots, 0);
    std::vector<int> sym_state(syms.size(), 0);
    std::vector<std::pair<int, int>> trail;
    int cnt = 0;

    auto advance = [&]() -> bool {
        for (std::size_t si = 0; si < syms.size(); ++si) {
            int p = sym_state[si];
            if (p < 0) continue;
            const int start = p;
            bool fire = false;
            while (p < cnt) {
                const int src = syms[si].slot_map[static_cast<std::size_t>(p)];
                if (src >= cnt) break;
                const std::uint8_t vt = syms[si].color_map[colors[static_cast<std::size_t>(src)]];
                const std::uint8_t vo = colors[static_cast<std::size_t>(p)];
                if (vt < vo) { fire = true; break; }
                if (vt > vo) { p = -1; break; }
                ++p;
            }
            if (p != start) {
                trail.emplace_back(static_cast<int>(si), start);
                sym_state[si] = p;
            }
            if (fire) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self) -> void {
        if (cnt == pt.slots) {
            if (canon.is_min(colors)) ++classes;
            return;
        }
        for (int x = 0; x < k; ++x) {
            const std::size_t mark = trail.size();
            colors[static_cast<std::size_t>(cnt)] = static_cast<std::uint8_t>(x);
            ++cnt;
            if (advance()) self(self);
            while (trail.size() > mark) {
                const auto [si, old] = trail.back();
                trail.pop_back();
                sym_state[static_cast<std::size_t>(si)] = old;
            }
            --cnt;
        }
    };
    dfs(dfs);
    return classes;
}

}  // namespace dmp
