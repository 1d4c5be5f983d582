#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dmp/certify.hpp"
#include "dmp/constructions.hpp"
#include "dmp/errors.hpp"
#include "dmp/illusive.hpp"
#include "dmp/search.hpp"

namespace {

using dmp::Orders;

Orders parse_orders(const std::string& text) {
    Orders out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw dmp::ValidationError("bad orders list '" + text + "'");
        }
    }
    if (out.empty()) throw dmp::ValidationError("empty orders list");
    return out;
}

const char* verdict_text(dmp::SearchVerdict v) {
    switch (v) {
        case dmp::SearchVerdict::AllGood: return "ALL-GOOD";
        case dmp::SearchVerdict::Counterexample: return "COUNTEREXAMPLE";
        case dmp::SearchVerdict::BudgetExceeded: return "BUDGET-EXCEEDED";
    }
    return "?";
}

nlohmann::json stats_json(const dmp::SearchStats& s) {
    return {{"nodes", s.nodes},
            {"leaves", s.leaves},
            {"canonical_classes", s.canonical_classes},
            {"pruned_canonical", s.pruned_canonical},
            {"pruned_bipartite", s.pruned_bipartite},
            {"wall_ms", s.wall_ms},
            {"completed", s.completed}};
}

nlohmann::json query_report(const dmp::SearchQuery& q, const dmp::SearchOutcome& out,
                            const std::string& witness_path) {
    nlohmann::json j;
    j["query"] = {{"n", q.n}, {"k", q.k}, {"orders", q.orders}};
    j["verdict"] = verdict_text(out.verdict);
    j["witness_path"] = witness_path.empty() ? nlohmann::json() : nlohmann::json(witness_path);
    j["stats"] = stats_json(out.stats);
    j["runtime_ms"] = out.stats.wall_ms;
    nlohmann::json flags = nlohmann::json::array();
    if (q.options.prune_bipartite) flags.push_back("bipartite");
    j["prune_flags"] = flags;
    if (q.options.deterministic) j["deterministic"] = true;
    if (q.options.budget_seconds) j["budget_seconds"] = *q.options.budget_seconds;
    j["workers"] = q.options.workers;
    return j;
}

void print_witness(const dmp::DegreeMonotonePath& w) {
    std::cout << "witness:";
    for (int v : w.vertices) std::cout << " " << v;
    std::cout << " (degrees:";
    for (int d : w.degrees) std::cout << " " << d;
    std::cout << ")\n";
}

struct SearchArgs {
    int n = 0, k = 0, m = 0, from = 0, to = 0;
    std::string orders;
    std::string prune;
    int workers = 1;
    bool deterministic = false;
    bool brute = false;
    double budget = -1.0;
    std::string out_path;
    std::string report_path;

    dmp::SearchOptions options() const {
        dmp::SearchOptions o;
        if (!prune.empty()) {
            if (prune != "bipartite") throw dmp::ValidationError("unknown prune mode '" + prune + "'");
            o.prune_bipartite = true;
        }
        o.workers = workers;
        o.deterministic = deterministic;
        o.brute = brute;
        if (budget >= 0) o.budget_seconds = budget;
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-monotone path analysis, extremal colorings and exhaustive search"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, orders_text, out_path, report_path, profile = "quick";
    std::string seeds_text;
    int k = 0, m = 0, t = 0, maxv = 0;

    auto* cmd_mp = app.add_subcommand("mp", "compute mp(G) with a witness");
    cmd_mp->add_option("--graph", graph_path, "graph file")->required();

    auto* cmd_verify = app.add_subcommand("verify", "check a coloring against required orders");
    cmd_verify->add_option("--coloring", coloring_path, "coloring file")->required();
    cmd_verify->add_option("--orders", orders_text, "required orders, e.g. 3,3")->required();

    auto* cmd_construct = app.add_subcommand("construct", "extremal coloring generators");
    cmd_construct->require_subcommand(1);
    auto* con_lb = cmd_construct->add_subcommand("lower-bound", "recursive clique-block coloring");
    con_lb->add_option("--k", k)->required();
    con_lb->add_option("--m", m)->required();
    con_lb->add_option("--t", t)->required();
    con_lb->add_option("-o,--output", out_path)->required();
    auto* con_lift = cmd_construct->add_subcommand("lift", "add one color to a seed set");
    con_lift->add_option("--m", m)->required();
    con_lift->add_option("--seeds", seeds_text, "comma separated coloring files, sizes descending")
        ->required();
    con_lift->add_option("-o,--output", out_path, "output prefix")->required();
    auto* con_off = cmd_construct->add_subcommand("offdiag-tight", "tight coloring for orders (m,3)");
    con_off->add_option("--m", m)->required();
    con_off->add_option("-o,--output", out_path)->required();
    auto* con_m3 = cmd_construct->add_subcommand("m3-family", "order-3 seed family for k colors");
    con_m3->add_option("--k", k)->required();
    con_m3->add_option("-o,--output", out_path, "output prefix")->required();

    auto* cmd_search = app.add_subcommand("search", "exhaustive decisions");
    cmd_search->require_subcommand(1);
    SearchArgs sa;
    auto* s_decide = cmd_search->add_subcommand("decide", "decide one (n, k, orders) instance");
    s_decide->add_option("--n", sa.n)->required();
    s_decide->add_option("--k", sa.k)->required();
    s_decide->add_option("--orders", sa.orders)->required();
    s_decide->add_option("--prune", sa.prune, "bipartite");
    s_decide->add_option("--workers", sa.workers);
    s_decide->add_flag("--deterministic", sa.deterministic);
    s_decide->add_flag("--brute", sa.brute);
    s_decide->add_option("--budget-seconds", sa.budget);
    s_decide->add_option("-o,--output", sa.out_path, "counterexample file");
    s_decide->add_option("--report", sa.report_path, "JSON report file");
    auto* s_scan = cmd_search->add_subcommand("scan", "decide a range of n");
    s_scan->add_option("--k", sa.k)->required();
    s_scan->add_option("--m", sa.m)->required();
    s_scan->add_option("--from", sa.from)->required();
    s_scan->add_option("--to", sa.to)->required();
    s_scan->add_option("--prune", sa.prune, "bipartite");
    s_scan->add_option("--workers", sa.workers);
    s_scan->add_flag("--deterministic", sa.deterministic);
    s_scan->add_option("--budget-seconds", sa.budget);
    s_scan->add_option("-o,--output", sa.out_path, "counterexample file prefix");
    s_scan->add_option("--report", sa.report_path, "JSON report file");

    auto* cmd_ill = app.add_subcommand("illusive", "bipartite degree-dominance certification");
    cmd_ill->require_subcommand(1);
    auto* i_scan = cmd_ill->add_subcommand("scan", "exhaust bipartite graphs for illusive ones");
    i_scan->add_option("--max", maxv, "max vertices")->required();
    auto* i_kk = cmd_ill->add_subcommand("k-kplus1", "strict dominance forces K_{k,k+1}");
    i_kk->add_option("--k", k)->required();
    auto* i_bal = cmd_ill->add_subcommand("balanced-regular", "weak dominance forces balance");
    i_bal->add_option("--max", maxv, "max vertices")->required();
    auto* i_margin = cmd_ill->add_subcommand("margin", "counting inequality margin");
    i_margin->add_option("--k", k)->required();

    auto* cmd_cert = app.add_subcommand("certify", "replay the certified claims");
    cmd_cert->add_option("--profile", profile, "quick|full")->check(CLI::IsMember({"quick", "full"}));
    cmd_cert->add_option("--report", report_path, "JSON report file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_mp) {
            const dmp::Graph g = dmp::load_graph(graph_path);
            const dmp::MpResult r = dmp::mp_exact(g);
            std::cout << "mp = " << r.value << "\n";
            print_witness(r.witness);
            return 0;
        }
        if (*cmd_verify) {
            const dmp::EdgeColoring c = dmp::load_coloring(coloring_path);
            const auto verdict = dmp::verify_coloring(c, parse_orders(orders_text));
            if (verdict.found) {
                std::cout << "FOUND color=" << verdict.found->first
                          << " order=" << verdict.found->second.vertices.size() << "\n";
                print_witness(verdict.found->second);
                return 1;
            }
            std::cout << "NO-MDM-PATH\n";
            return 0;
        }
        if (*con_lb) {
            const dmp::EdgeColoring c = dmp::lower_bound_coloring(k, m, t);
            dmp::save_coloring(c, out_path);
            std::cout << "wrote " << out_path << " (K_" << c.order() << ", " << c.color_count()
                      << " colors)\n";
            return 0;
        }
        if (*con_lift) {
            dmp::SeedSet seeds;
            seeds.m = m;
            std::stringstream ss(seeds_text);
            std::string item;
            std::vector<dmp::EdgeColoring> members;
            while (std::getline(ss, item, ',')) members.push_back(dmp::load_coloring(item));
            if (members.empty()) throw dmp::ValidationError("no seed files given");
            seeds.k = members.front().color_count();
            seeds.members = std::move(members);
            const dmp::SeedSet lifted = dmp::lift_seeds(seeds, m);
            for (const auto& c : lifted.members) {
                const std::string path = out_path + "_n" + std::to_string(c.order()) + ".kcol";
                dmp::save_coloring(c, path);
                std::cout << "wrote " << path << "\n";
            }
            return 0;
        }
        if (*con_off) {
            const dmp::EdgeColoring c = dmp::offdiag_tight(m);
            dmp::save_coloring(c, out_path);
            std::cout << "wrote " << out_path << " (K_" << c.order() << ")\n";
            return 0;
        }
        if (*con_m3) {
            const dmp::SeedSet fam = dmp::m3_family(k);
            for (const auto& c : fam.members) {
                const std::string path = out_path + "_n" + std::to_string(c.order()) + ".kcol";
                dmp::save_coloring(c, path);
                std::cout << "wrote " << path << "\n";
            }
            return 0;
        }
        if (*s_decide) {
            dmp::SearchQuery q{sa.n, sa.k, parse_orders(sa.orders), sa.options()};
            const dmp::SearchOutcome out = dmp::decide(q);
            std::string witness_path;
            if (out.counterexample && !sa.out_path.empty()) {
                dmp::save_coloring(*out.counterexample, sa.out_path);
                witness_path = sa.out_path;
            }
            std::cout << verdict_text(out.verdict);
            if (!witness_path.empty()) std::cout << " -> " << witness_path;
            std::cout << "\n";
            if (!sa.report_path.empty()) {
                std::ofstream rep(sa.report_path);
                rep << query_report(q, out, witness_path).dump(2) << "\n";
            }
            return out.verdict == dmp::SearchVerdict::BudgetExceeded ? 1 : 0;
        }
        if (*s_scan) {
            nlohmann::json rows = nlohmann::json::array();
            bool any_failed = false;
            dmp::scan(sa.k, sa.m, sa.from, sa.to, sa.options(), [&](const dmp::ScanRow& row) {
                std::string witness_path;
                if (!row.error.empty()) {
                    std::cout << "n=" << row.n << ": ERROR " << row.error << "\n";
                    any_failed = true;
                } else {
                    if (row.outcome.counterexample && !sa.out_path.empty()) {
                        witness_path = sa.out_path + "_n" + std::to_string(row.n) + ".kcol";
                        dmp::save_coloring(*row.outcome.counterexample, witness_path);
                    }
                    std::cout << "n=" << row.n << ": " << verdict_text(row.outcome.verdict);
                    if (!witness_path.empty()) std::cout << " -> " << witness_path;
                    std::cout << "\n";
                    if (row.outcome.verdict == dmp::SearchVerdict::BudgetExceeded) any_failed = true;
                }
                dmp::SearchQuery q{row.n, sa.k, Orders(static_cast<std::size_t>(sa.k), sa.m),
                                   sa.options()};
                auto j = row.error.empty() ? query_report(q, row.outcome, witness_path)
                                           : nlohmann::json{{"query", {{"n", row.n}, {"k", sa.k}}},
                                                            {"error", row.error}};
                rows.push_back(std::move(j));
            });
            if (!sa.report_path.empty()) {
                std::ofstream rep(sa.report_path);
                rep << rows.dump(2) << "\n";
            }
            return any_failed ? 1 : 0;
        }
        if (*i_scan) {
            const auto hit = dmp::scan_illusive(maxv);
            if (hit) {
                std::cout << "ILLUSIVE GRAPH FOUND\n" << dmp::serialize_graph(hit->graph);
                return 1;
            }
            std::cout << "no illusive graphs up to " << maxv << " vertices\n";
            return 0;
        }
        if (*i_kk) {
            const bool ok = dmp::check_k_kplus1(k);
            std::cout << "only K_{" << k << "," << k + 1 << "} qualifies: " << (ok ? "true" : "false")
                      << "\n";
            return ok ? 0 : 1;
        }
        if (*i_bal) {
            const bool ok = dmp::check_balanced_regular(maxv);
            std::cout << "balanced and regular up to " << maxv << " vertices: "
                      << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (*i_margin) {
            const dmp::MarginCheck mc = dmp::upper_bound_margin(k);
            std::cout << "lhs = " << mc.lhs << ", rhs = " << mc.rhs << ", holds = "
                      << (mc.holds ? "yes" : "no") << "\n";
            return mc.holds ? 0 : 1;
        }
        if (*cmd_cert) {
            const auto prof = profile == "full" ? dmp::CertProfile::Full : dmp::CertProfile::Quick;
            const dmp::CertReport report = dmp::run_certify(prof, &std::cout);
            if (!report_path.empty()) dmp::write_report(report, report_path);
            const bool ok = report.all_required_pass();
            std::cout << (ok ? "CERTIFY PASS" : "CERTIFY FAIL") << " (" << report.entries.size()
                      << " entries)\n";
            return ok ? 0 : 1;
        }
    } catch (const dmp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dmp::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
