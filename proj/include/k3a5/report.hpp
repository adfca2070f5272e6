#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace k3a5 {

inline constexpr const char* tool_version = "1.0.0";

enum class CheckStatus { pass, fail, flagged };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

// One verified claim: where it lives in the source text, what we computed,
// what the text reports.  `flagged` marks a documented discrepancy and
// always carries a note; it does not fail the run.
struct CheckRecord {
    std::string id;
    std::string paper_location;
    std::string computed;
    std::string expected;
    CheckStatus status = CheckStatus::fail;
    std::string note;

    bool operator==(const CheckRecord&) const = default;
};

CheckRecord check_equal(std::string id, std::string location, std::string computed,
                        std::string expected, std::string note = "");
CheckRecord check_flagged(std::string id, std::string location, std::string computed,
                          std::string expected, std::string note);

struct VerificationReport {
    std::string version = tool_version;
    std::vector<CheckRecord> checks;

    long passed() const;
    long failed() const;
    long flagged() const;
    bool success() const { return failed() == 0; }

    bool operator==(const VerificationReport&) const = default;
};

enum class ReportFormat { text, structured };

struct UnknownSelector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_selectors();  // includes "all"
VerificationReport run_suite(const std::string& selector);  // throws UnknownSelector

std::string render_report(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report(const std::string& structured_text);

}  // namespace k3a5
