#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coringlab {

inline constexpr const char* tool_version = "coringlab 0.1.0";

// FNV-1a fingerprint of the input bytes, printed in report headers so that a
// report can be matched to the exact file it was produced from.
std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t value);

struct ReportLine {
    bool pass = false;
    bool verdict = true;  // false marks an informational note outside the exit contract
    std::string name;
    std::string details;
};

// Plain-text verdict report: a header naming the tool and input, one verdict
// per line, and a closing tally.  Rendering is deterministic; the exit status
// is zero exactly when no FAIL line is present.
struct VerdictReport {
    std::string digest;
    std::vector<std::string> context;
    std::vector<ReportLine> lines;

    void pass(std::string name, std::string details);
    void fail(std::string name, std::string details);
    void note(std::string name, std::string details);

    std::size_t failed() const;
    bool ok() const { return failed() == 0; }
    int exit_status() const { return ok() ? 0 : 1; }
    std::string render() const;
};

} // namespace coringlab
