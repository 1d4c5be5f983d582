#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dmp/certify.hpp"

TEST_CASE("quick certification passes and its report round-trips") {
    std::ostringstream progress;
    const dmp::CertReport report = dmp::run_certify(dmp::CertProfile::Quick, &progress);
    CHECK(report.entries.size() == 5);  // the sub-minute claims
    CHECK(report.all_required_pass());
    for (const auto& e : report.entries) CHECK(e.pass);
    CHECK(progress.str().find("[PASS]") != std::string::npos);
    CHECK(progress.str().find("[FAIL]") == std::string::npos);

    const auto parsed = nlohmann::json::parse(dmp::report_to_json(report));
    CHECK(parsed["entries"].size() == report.entries.size());
    CHECK(parsed["all_required_pass"].get<bool>());
    for (const auto& e : parsed["entries"]) {
        CHECK(e.contains("id"));
        CHECK(e.contains("statement"));
        CHECK(e.contains("command"));
        CHECK(e.contains("expected"));
        CHECK(e.contains("observed"));
        CHECK(e.contains("runtime_ms"));
    }
}
