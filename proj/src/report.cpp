#include "k3a5/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace k3a5 {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::flagged: return "flagged";
    }
    throw std::logic_error("bad status");
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "flagged") return CheckStatus::flagged;
    throw std::invalid_argument("unknown check status: " + s);
}

CheckRecord check_equal(std::string id, std::string location, std::string computed,
                        std::string expected, std::string note) {
    CheckRecord r;
    r.status = computed == expected ? CheckStatus::pass : CheckStatus::fail;
    r.id = std::move(id);
    r.paper_location = std::move(location);
    r.computed = std::move(computed);
    r.expected = std::move(expected);
    r.note = std::move(note);
    return r;
}

CheckRecord check_flagged(std::string id, std::string location, std::string computed,
                          std::string expected, std::string note) {
    if (note.empty()) throw std::invalid_argument("flagged checks require a note");
    CheckRecord r;
    r.status = CheckStatus::flagged;
    r.id = std::move(id);
    r.paper_location = std::move(location);
    r.computed = std::move(computed);
    r.expected = std::move(expected);
    r.note = std::move(note);
    return r;
}

long VerificationReport::passed() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](const CheckRecord& c) { return c.status == CheckStatus::pass; });
}
long VerificationReport::failed() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}
long VerificationReport::flagged() const {
    return std::count_if(checks.begin(), checks.end(),
                         [](const CheckRecord& c) { return c.status == CheckStatus::flagged; });
}

namespace {

std::string render_text(const VerificationReport& r) {
    std::size_t id_w = 2, loc_w = 8;
    for (const CheckRecord& c : r.checks) {
        id_w = std::max(id_w, c.id.size());
        loc_w = std::max(loc_w, c.paper_location.size());
    }
    std::string out = "verification report (version " + r.version + ")\n";
    for (const CheckRecord& c : r.checks) {
        std::string status = to_string(c.status);
        status.resize(7, ' ');
        std::string id = c.id;
        id.resize(id_w, ' ');
        std::string loc = c.paper_location;
        loc.resize(loc_w, ' ');
        out += status + " " + id + " " + loc + " computed: " + c.computed +
               " | expected: " + c.expected;
        if (!c.note.empty()) out += " | note: " + c.note;
        out += "\n";
    }
    out += "summary: " + std::to_string(r.passed()) + " pass, " + std::to_string(r.failed()) +
           " fail, " + std::to_string(r.flagged()) + " flagged\n";
    return out;
}

std::string render_structured(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["version"] = r.version;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["paper_location"] = c.paper_location;
        jc["computed"] = c.computed;
        jc["expected"] = c.expected;
        jc["status"] = to_string(c.status);
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"] = {{"pass", r.passed()}, {"fail", r.failed()}, {"flagged", r.flagged()}};
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format) {
    return format == ReportFormat::text ? render_text(report) : render_structured(report);
}

VerificationReport parse_report(const std::string& structured_text) {
    nlohmann::json j = nlohmann::json::parse(structured_text);
    VerificationReport r;
    r.version = j.at("version").get<std::string>();
    for (const auto& jc : j.at("checks")) {
        CheckRecord c;
        c.id = jc.at("id").get<std::string>();
        c.paper_location = jc.at("paper_location").get<std::string>();
        c.computed = jc.at("computed").get<std::string>();
        c.expected = jc.at("expected").get<std::string>();
        c.status = status_from_string(jc.at("status").get<std::string>());
        if (jc.contains("note")) c.note = jc.at("note").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    const auto& s = j.at("summary");
    if (s.at("pass").get<long>() != r.passed() || s.at("fail").get<long>() != r.failed() ||
        s.at("flagged").get<long>() != r.flagged())
        throw std::invalid_argument("report summary does not match its checks");
    return r;
}

}  // namespace k3a5
