#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/dmp_cli_out.txt";
    const std::string cmd = std::string(DMP_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    return r;
}

}  // namespace

TEST_CASE("cli: mp on the shipped fixture") {
    const auto r = run_cli(std::string("mp --graph ") + DMP_FIXTURES_DIR + "/k23_u_k2.graph");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("mp = 2") != std::string::npos);
    CHECK(r.output.find("witness:") != std::string::npos);
}

TEST_CASE("cli: decide exit codes and output") {
    const auto good = run_cli("search decide --n 4 --k 2 --orders 3,3");
    CHECK(good.exit_code == 0);
    CHECK(good.output.find("ALL-GOOD") != std::string::npos);

    const auto cex = run_cli("search decide --n 3 --k 2 --orders 3,3 -o /tmp/dmp_cex.kcol --report /tmp/dmp_cex.json");
    CHECK(cex.exit_code == 0);
    CHECK(cex.output.find("COUNTEREXAMPLE") != std::string::npos);
    const auto verify_cex = run_cli("verify --coloring /tmp/dmp_cex.kcol --orders 3,3");
    CHECK(verify_cex.exit_code == 0);
    CHECK(verify_cex.output.find("NO-MDM-PATH") != std::string::npos);

    std::ifstream rep("/tmp/dmp_cex.json");
    std::ostringstream buf;
    buf << rep.rdbuf();
    CHECK(buf.str().find("\"verdict\": \"COUNTEREXAMPLE\"") != std::string::npos);
}

TEST_CASE("cli: verify exits 1 when a required path exists") {
    const auto c = run_cli("construct offdiag-tight --m 4 -o /tmp/dmp_off.kcol");
    CHECK(c.exit_code == 0);
    const auto neg = run_cli("verify --coloring /tmp/dmp_off.kcol --orders 4,3");
    CHECK(neg.exit_code == 0);
    const auto pos = run_cli("verify --coloring /tmp/dmp_off.kcol --orders 2,3");
    CHECK(pos.exit_code == 1);
    CHECK(pos.output.find("FOUND color=0") != std::string::npos);
}

TEST_CASE("cli: construct then verify round trip") {
    const auto c = run_cli("construct lower-bound --k 2 --m 4 --t 0 -o /tmp/dmp_lb.kcol");
    CHECK(c.exit_code == 0);
    const auto v = run_cli("verify --coloring /tmp/dmp_lb.kcol --orders 4,4");
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("NO-MDM-PATH") != std::string::npos);

    // byte-identical output on identical invocations
    const auto c2 = run_cli("construct lower-bound --k 2 --m 4 --t 0 -o /tmp/dmp_lb2.kcol");
    CHECK(c2.exit_code == 0);
    std::ifstream a("/tmp/dmp_lb.kcol"), b("/tmp/dmp_lb2.kcol");
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());
    CHECK(!sa.str().empty());
}

TEST_CASE("cli: scan prints one row per n") {
    const auto r = run_cli("search scan --k 2 --m 3 --from 3 --to 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n=3: COUNTEREXAMPLE") != std::string::npos);
    CHECK(r.output.find("n=4: ALL-GOOD") != std::string::npos);
    CHECK(r.output.find("n=5: ALL-GOOD") != std::string::npos);
}

TEST_CASE("cli: illusive subcommands") {
    const auto scan = run_cli("illusive scan --max 8");
    CHECK(scan.exit_code == 0);
    CHECK(scan.output.find("no illusive graphs") != std::string::npos);

    const auto margin = run_cli("illusive margin --k 8");
    CHECK(margin.exit_code == 0);
    CHECK(margin.output.find("lhs = 8, rhs = 5, holds = yes") != std::string::npos);

    const auto kk = run_cli("illusive k-kplus1 --k 2");
    CHECK(kk.exit_code == 0);

    const auto bal = run_cli("illusive balanced-regular --max 8");
    CHECK(bal.exit_code == 0);
}

TEST_CASE("cli: usage errors exit 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("mp").exit_code == 2);                     // missing --graph
    CHECK(run_cli("search decide --n 4 --k 2").exit_code == 2);
    CHECK(run_cli("mp --graph /nonexistent.graph").exit_code == 2);
    CHECK(run_cli("search decide --n 4 --k 2 --orders 3,3 --prune odd").exit_code == 2);
}
