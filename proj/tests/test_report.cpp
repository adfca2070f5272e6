#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3a5/report.hpp"

using namespace k3a5;

TEST_CASE("check record construction") {
    CheckRecord ok = check_equal("id", "Lemma 0", "42", "42");
    CHECK(ok.status == CheckStatus::pass);
    CheckRecord bad = check_equal("id", "Lemma 0", "41", "42");
    CHECK(bad.status == CheckStatus::fail);
    CheckRecord fl = check_flagged("id", "Lemma 0", "{1,2}", "{1}", "documented discrepancy");
    CHECK(fl.status == CheckStatus::flagged);
    CHECK_THROWS_AS(check_flagged("id", "loc", "a", "b", ""), std::invalid_argument);
}

TEST_CASE("report counts and success") {
    VerificationReport r;
    r.checks.push_back(check_equal("a", "l", "1", "1"));
    r.checks.push_back(check_flagged("b", "l", "x", "y", "note"));
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 1);
    CHECK(r.success());
    r.checks.push_back(check_equal("c", "l", "1", "2"));
    CHECK(!r.success());
}

TEST_CASE("empty report renders zero summary") {
    VerificationReport r;
    std::string text = render_report(r, ReportFormat::text);
    CHECK(text.find("0 pass, 0 fail, 0 flagged") != std::string::npos);
    VerificationReport back = parse_report(render_report(r, ReportFormat::structured));
    CHECK(back == r);
}

TEST_CASE("structured output round-trips") {
    for (const std::string& selector : suite_selectors()) {
        VerificationReport r = run_suite(selector);
        VerificationReport back = parse_report(render_report(r, ReportFormat::structured));
        CHECK(back == r);
    }
}

TEST_CASE("rendering is deterministic across runs") {
    for (ReportFormat f : {ReportFormat::text, ReportFormat::structured})
        CHECK(render_report(run_suite("prop1_4"), f) == render_report(run_suite("prop1_4"), f));
    CHECK(render_report(run_suite("all"), ReportFormat::structured) ==
          render_report(run_suite("all"), ReportFormat::structured));
}

TEST_CASE("suite contracts") {
    SUBCASE("unknown selector") {
        CHECK_THROWS_AS(run_suite("foo"), UnknownSelector);
    }
    SUBCASE("prop1_4 contains the three solution-set checks, all pass") {
        VerificationReport r = run_suite("prop1_4");
        int found = 0;
        for (const CheckRecord& c : r.checks)
            if (c.id.rfind("prop1_4/solutions_", 0) == 0) {
                ++found;
                CHECK(c.status == CheckStatus::pass);
            }
        CHECK(found == 3);
    }
    SUBCASE("all: at least 20 records, success, lemma 1.8 flagged") {
        VerificationReport r = run_suite("all");
        CHECK(r.checks.size() >= 20);
        CHECK(r.success());
        bool found_flag = false;
        for (const CheckRecord& c : r.checks)
            if (c.id == "lemma1_8/transitive_degrees") {
                found_flag = true;
                CHECK(c.status == CheckStatus::flagged);
                CHECK(!c.note.empty());
            }
        CHECK(found_flag);
    }
    SUBCASE("records are ordered by id") {
        VerificationReport r = run_suite("all");
        for (std::size_t i = 0; i + 1 < r.checks.size(); ++i)
            CHECK(r.checks[i].id < r.checks[i + 1].id);
    }
    SUBCASE("flagged records do not fail the run") {
        VerificationReport r = run_suite("lemma1_8");
        CHECK(r.flagged() == 1);
        CHECK(r.success());
    }
}

TEST_CASE("malformed structured input is rejected") {
    CHECK_THROWS(parse_report("not json"));
    CHECK_THROWS(parse_report("{\"version\": \"1.0.0\", \"checks\": [], "
                              "\"summary\": {\"pass\": 3, \"fail\": 0, \"flagged\": 0}}"));
}
