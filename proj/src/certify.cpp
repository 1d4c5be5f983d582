#include "dmp/certify.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dmp/constructions.hpp"
#include "dmp/errors.hpp"
#include "dmp/illusive.hpp"
#include "dmp/search.hpp"

namespace dmp {

namespace {

const char* verdict_name(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::AllGood: return "all-good";
        case SearchVerdict::Counterexample: return "counterexample";
        case SearchVerdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

SearchOutcome run_decide(int n, int k, Orders orders, bool prune = false, bool deterministic = false,
                         std::optional<double> budget = std::nullopt) {
    SearchQuery q;
    q.n = n;
    q.k = k;
    q.orders = std::move(orders);
    q.options.prune_bipartite = prune;
    q.options.deterministic = deterministic;
    q.options.budget_seconds = budget;
    return decide(q);
}

struct Runner {
    CertReport report;
    std::ostream* progress = nullptr;

    void entry(const std::string& id, const std::string& statement, const std::string& command,
               const std::string& expected, bool required, auto&& body) {
        CertEntry e;
        e.id = id;
        e.statement = statement;
        e.command = command;
        e.expected = expected;
        e.required = required;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            auto [pass, observed] = body();
            e.pass = pass;
            e.observed = observed;
        } catch (const std::exception& ex) {
            e.pass = false;
            e.observed = std::string("exception: ") + ex.what();
        }
        e.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            (*progress) << (e.pass ? "[PASS] " : (e.required ? "[FAIL] " : "[WARN] ")) << e.id
                        << ": " << e.statement << " (" << static_cast<long>(e.runtime_ms) << " ms)"
                        << (e.pass ? "" : (" — " + e.observed)) << "\n";
            progress->flush();
        }
        report.entries.push_back(std::move(e));
    }
};

using Result = std::pair<bool, std::string>;

Result criterion_m2_3() {
    std::ostringstream obs;
    bool pass = true;
    const auto c3 = run_decide(3, 2, {3, 3});
    pass &= c3.verdict == SearchVerdict::Counterexample;
    obs << "n=3: " << verdict_name(c3.verdict);
    for (int n = 4; n <= 6; ++n) {
        const auto r = run_decide(n, 2, {3, 3});
        pass &= r.verdict == SearchVerdict::AllGood;
        obs << ", n=" << n << ": " << verdict_name(r.verdict);
    }
    return {pass, obs.str()};
}

Result criterion_m3_3() {
    std::ostringstream obs;
    bool pass = true;
    const Graph target = disjoint_union(complete_bipartite_graph(2, 3), matching_graph(1));
    for (int n = 5; n <= 7; ++n) {
        const auto r = run_decide(n, 3, {3, 3, 3}, /*prune=*/true);
        pass &= r.verdict == SearchVerdict::Counterexample;
        obs << "n=" << n << ": " << verdict_name(r.verdict);
        if (n == 7 && r.counterexample) {
            bool structure = true;
            for (int j = 0; j < 3; ++j)
                structure &= isomorphic(color_subgraph(*r.counterexample, j), target);
            pass &= structure;
            obs << (structure ? " (classes = K_{2,3}+K_2)" : " (unexpected class structure)");
        }
        obs << ", ";
    }
    const auto r8 = run_decide(8, 3, {3, 3, 3}, /*prune=*/true);
    pass &= r8.verdict == SearchVerdict::AllGood;
    obs << "n=8: " << verdict_name(r8.verdict) << " (" << r8.stats.leaves << " leaves, "
        << static_cast<long>(r8.stats.wall_ms) << " ms)";
    return {pass, obs.str()};
}

Result criterion_m2_4() {
    std::ostringstream obs;
    bool pass = true;
    const EdgeColoring lb = lower_bound_coloring(2, 4, 0);  // self-verifies on K_6
    obs << "K_" << lb.order() << " construction verified; ";
    const auto c6 = run_decide(6, 2, {4, 4});
    pass &= c6.verdict == SearchVerdict::Counterexample;
    obs << "n=6: " << verdict_name(c6.verdict);
    for (int n = 7; n <= 9; ++n) {
        SearchQuery q{n, 2, {4, 4}, {}};
        // at n = 9 the per-leaf canonicity check would dominate; the class
        // count is reported from the orbit count instead (not asserted)
        if (n == 9) q.options.exact_class_stats = false;
        const auto r = decide(q);
        pass &= r.verdict == SearchVerdict::AllGood;
        const std::uint64_t classes =
            n == 9 ? count_classes_orbit(n, 2, CanonMode::VertexAndEqualOrderColors, {4, 4})
                   : r.stats.canonical_classes;
        obs << ", n=" << n << ": " << verdict_name(r.verdict) << " (" << classes << " classes)";
    }
    return {pass, obs.str()};
}

Result criterion_m_3_4() {
    std::ostringstream obs;
    bool pass = true;
    const auto c5 = run_decide(5, 2, {3, 4}, false, /*deterministic=*/true);
    pass &= c5.verdict == SearchVerdict::Counterexample;
    obs << "n=5: " << verdict_name(c5.verdict);
    if (c5.counterexample) {
        // orders (3,4) put the bipartite class in color 0; the generator emits
        // the mirrored convention, so swap colors before comparing codes.
        const EdgeColoring tight = recolored(offdiag_tight(4), {1, 0});
        const bool equal = canonical_form(*c5.counterexample, CanonMode::VertexAndEqualOrderColors,
                                          {3, 4}) ==
                           canonical_form(tight, CanonMode::VertexAndEqualOrderColors, {3, 4});
        pass &= equal;
        obs << (equal ? " (= offdiag_tight(4))" : " (differs from offdiag_tight(4))");
    }
    for (int n = 6; n <= 7; ++n) {
        const auto r = run_decide(n, 2, {3, 4});
        pass &= r.verdict == SearchVerdict::AllGood;
        obs << ", n=" << n << ": " << verdict_name(r.verdict);
    }
    return {pass, obs.str()};
}

Result criterion_constructions() {
    std::ostringstream obs;
    bool pass = true;
    int built = 0;
    for (int k = 2; k <= 4; ++k) {
        for (int m = 3; m <= 5; ++m) {
            for (int t = 0; t <= m - 1; ++t) {
                std::int64_t size = static_cast<std::int64_t>(1);
                for (int i = 0; i < k; ++i) size *= m - 1;
                size = (size + (m - 1)) / 2 - t;
                if (size > Graph::kMaxVertices) continue;
                const EdgeColoring c = lower_bound_coloring(k, m, t);
                if (c.order() != size ||
                    verify_coloring(c, Orders(static_cast<std::size_t>(k), m)).found) {
                    pass = false;
                    obs << "failed at (" << k << "," << m << "," << t << "); ";
                }
                ++built;
            }
        }
    }
    obs << built << " clique-block colorings verified negative; ";
    for (int k = 3; k <= 5; ++k) {
        const SeedSet fam = m3_family(k);  // validates all members
        obs << "m3_family(" << k << "): sizes " << fam.members[0].order() << ","
            << fam.members[1].order() << "," << fam.members[2].order() << "; ";
        const int want = 3 * (1 << (k - 2)) + 1;
        pass &= fam.members[0].order() == want;
    }
    return {pass, obs.str()};
}

Result criterion_illusive() {
    std::ostringstream obs;
    bool pass = true;
    const auto hit = scan_illusive(12);
    pass &= !hit.has_value();
    obs << "scan(12): " << (hit ? "counterexample!" : "none") << "; ";
    for (int k = 1; k <= 3; ++k) {
        const bool ok = check_k_kplus1(k);
        pass &= ok;
        obs << "k_kplus1(" << k << "): " << (ok ? "true" : "false") << "; ";
    }
    const bool balanced = check_balanced_regular(10);
    pass &= balanced;
    obs << "balanced_regular(10): " << (balanced ? "true" : "false") << "; margins:";
    const std::pair<int, std::pair<std::int64_t, std::int64_t>> frozen[] = {
        {4, {3, 3}}, {6, {5, 4}}, {7, {5, 4}}, {8, {8, 5}}, {9, {8, 5}}};
    for (int k = 4; k <= 20; ++k) {
        const MarginCheck mc = upper_bound_margin(k);
        pass &= mc.holds;
        for (const auto& [kk, lr] : frozen)
            if (kk == k && (mc.lhs != lr.first || mc.rhs != lr.second)) {
                pass = false;
                obs << " k=" << k << " values off!";
            }
        if (!mc.holds) obs << " k=" << k << " fails!";
    }
    obs << " all hold for k=4..20";
    return {pass, obs.str()};
}

Result criterion_oracles() {
    std::ostringstream obs;
    bool pass = true;
    std::mt19937_64 rng(20250811);
    int checked = 0, mismatches = 0;

    auto check_graph = [&](const Graph& g) {
        const MpResult r = mp_exact(g);
        bool ok = is_valid_witness(g, r.witness) &&
                  static_cast<int>(r.witness.vertices.size()) == r.value;
        if (g.order() <= 12) ok &= r.value == mp_oracle(g);
        ok &= r.value >= chromatic_number(g);
        ok &= r.value >= degree_orientation_lower(g);
        for (int m = 1; m <= g.order(); ++m) ok &= has_mdm(g, m).has_value() == (r.value >= m);
        if (!ok) ++mismatches;
        ++checked;
    };

    for (int i = 0; i < 500; ++i) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double p = 0.05 + 0.9 * std::uniform_real_distribution<double>()(rng);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<double>()(rng) < p) edges.emplace_back(u, v);
        check_graph(Graph::from_edges(n, edges));
    }
    for (int n = 1; n <= 9; ++n) check_graph(complete_graph(n));
    for (int a = 1; a <= 5; ++a)
        for (int b = a; b <= 5 && a + b <= 10; ++b) check_graph(complete_bipartite_graph(a, b));
    for (int n = 1; n <= 10; ++n) check_graph(path_graph(n));
    for (int n = 3; n <= 10; ++n) check_graph(cycle_graph(n));
    for (int e = 1; e <= 5; ++e) check_graph(matching_graph(e));
    pass &= mismatches == 0;
    obs << checked << " graphs: mp_exact vs oracle/chi/orientation, " << mismatches
        << " mismatches; ";

    int instances = 0, disagreements = 0;
    auto sweep = [&](int n_max, int k) {
        std::vector<Orders> order_sets{{}};
        for (int j = 0; j < k; ++j) {
            std::vector<Orders> next;
            for (const auto& o : order_sets)
                for (int m : {3, 4}) {
                    Orders e = o;
                    e.push_back(m);
                    next.push_back(std::move(e));
                }
            order_sets = std::move(next);
        }
        for (int n = 2; n <= n_max; ++n) {
            for (const auto& orders : order_sets) {
                const auto a = run_decide(n, k, orders);
                SearchQuery qb{n, k, orders, {}};
                const auto b = decide_brute(qb);
                if (a.verdict != b.verdict) ++disagreements;
                ++instances;
            }
        }
    };
    sweep(5, 2);
    sweep(4, 3);
    pass &= disagreements == 0;
    obs << instances << " decide/brute instances, " << disagreements << " disagreements";
    return {pass, obs.str()};
}

Result criterion_n4_exploration() {
    std::ostringstream obs;
    bool pass = true;
    const SeedSet fam = m3_family(4);  // validates: 4-colorings of K_13, K_12, K_11
    obs << "4-color seeds " << fam.members[0].order() << "," << fam.members[1].order() << ","
        << fam.members[2].order() << " verified negative; ";
    for (int n = 8; n <= 10; ++n) {
        const auto r = run_decide(n, 4, {3, 3, 3, 3}, /*prune=*/true, false, /*budget=*/90.0);
        obs << "n=" << n << ": " << verdict_name(r.verdict) << " ("
            << static_cast<long>(r.stats.wall_ms) << " ms), ";
        // a timeout is a reported outcome; an all-good here would contradict
        // the lifted constructions above and must be flagged
        pass &= r.verdict != SearchVerdict::AllGood;
    }
    return {pass, obs.str()};
}

}  // namespace

bool CertReport::all_required_pass() const {
    for (const auto& e : entries)
        if (e.required && !e.pass) return false;
    return true;
}

CertReport run_certify(CertProfile profile, std::ostream* progress) {
    Runner r;
    r.progress = progress;
    const bool full = profile == CertProfile::Full;

    r.entry("M2(3)", "M_2(3) = 4", "search decide --n 3..6 --k 2 --orders 3,3",
            "counterexample at 3; all-good at 4,5,6", true, criterion_m2_3);
    if (full)
        r.entry("M3(3)", "M_3(3) = 8",
                "search decide --n 5..8 --k 3 --orders 3,3,3 --prune bipartite",
                "counterexamples at 5,6,7 (n=7 classes K_{2,3}+K_2); all-good at 8", true,
                criterion_m3_3);
    if (full)
        r.entry("M2(4)", "M_2(4) = 7", "search decide --n 6..9 --k 2 --orders 4,4",
                "counterexample at 6; all-good at 7,8,9", true, criterion_m2_4);
    r.entry("M(3,4)", "M(3,4) = 6", "search decide --n 5..7 --k 2 --orders 3,4 --deterministic",
            "counterexample at 5 equal to offdiag_tight(4); all-good at 6,7", true,
            criterion_m_3_4);
    r.entry("lower-bounds", "clique-block and lifted colorings verify negative",
            "construct lower-bound / m3-family + verify",
            "all (k<=4, m<=5, t<=m-1, size<=64) and m3_family(3..5) negative", true,
            criterion_constructions);
    r.entry("illusive", "no illusive graphs; balanced/regular and K_{k,k+1} structure; margins",
            "illusive scan/k-kplus1/balanced-regular/margin",
            "scan(12) empty; k_kplus1(1..3) true; balanced_regular(10) true; margins hold 4..20",
            true, criterion_illusive);
    r.entry("oracles", "mp_exact = oracle, >= chi, >= orientation; decide = brute",
            "(library property run)", "zero mismatches over seeded corpus and small instances",
            true, criterion_oracles);
    if (full)
        r.entry("N4(3)", "best-effort exploration below the 4-color bound",
                "search decide --n 8..10 --k 4 --orders 3,3,3,3 --prune bipartite --budget-seconds 90",
                "seeds at 13,12,11 negative; searches report counterexample or timeout", false,
                criterion_n4_exploration);
    return r.report;
}

std::string report_to_json(const CertReport& report) {
    nlohmann::json j;
    j["entries"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        j["entries"].push_back({{"id", e.id},
                                {"statement", e.statement},
                                {"command", e.command},
                                {"expected", e.expected},
                                {"observed", e.observed},
                                {"required", e.required},
                                {"pass", e.pass},
                                {"runtime_ms", e.runtime_ms}});
    }
    j["all_required_pass"] = report.all_required_pass();
    return j.dump(2);
}

void write_report(const CertReport& report, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << report_to_json(report) << "\n";
}

}  // namespace dmp
