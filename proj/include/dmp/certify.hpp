#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dmp {

enum class CertProfile { Quick, Full };

/// One replayed claim. `required` is false only for declared best-effort
/// searches whose timeout is a reported, non-failing outcome.
struct CertEntry {
    std::string id;
    std::string statement;
    std::string command;  // CLI equivalent of what was replayed
    std::string expected;
    std::string observed;
    bool required = true;
    bool pass = false;
    double runtime_ms = 0.0;
};

struct CertReport {
    std::vector<CertEntry> entries;
    bool all_required_pass() const;
};

/// Replays the certified claims: quick runs the fast ones, full adds the
/// long exhaustive searches. Progress lines are written per entry when a
/// stream is given.
CertReport run_certify(CertProfile profile, std::ostream* progress = nullptr);

std::string report_to_json(const CertReport& report);
void write_report(const CertReport& report, const std::filesystem::path& path);

}  // namespace dmp
