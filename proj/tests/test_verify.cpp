#include "polyquat/verify.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace polyquat::verify;

TEST_CASE("every suite passes") {
    for (const std::string& name : suite_names()) {
        CheckReport report = run_suite(name);
        CHECK(report.name == name);
        CHECK(report.passed);
        CHECK(!report.details.empty());
        for (const auto& d : report.details) {
            INFO(name, ": ", d.assertion, " expected ", d.expected, " got ", d.actual);
            CHECK(d.passed);
        }
    }
}

TEST_CASE("combined suite aggregates all checks") {
    std::size_t total = 0;
    for (const std::string& name : suite_names())
        total += run_suite(name).details.size();
    CheckReport all = run_suite("all");
    CHECK(all.passed);
    CHECK(all.details.size() == total);
    CHECK_THROWS_AS(run_suite("nosuch"), std::invalid_argument);
}

TEST_CASE("report rendering") {
    CheckReport report = run_suite("orbits");
    std::string text = report_text(report, /*verbose=*/true);
    CHECK(text.find("suite orbits") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    // Non-verbose success output is just the summary line.
    std::string quiet = report_text(report, /*verbose=*/false);
    CHECK(quiet.find("checks passed") != std::string::npos);

    auto j = nlohmann::json::parse(report_json(report));
    CHECK(j["suite"] == "orbits");
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == report.details.size());
    CHECK(j["checks"][0]["passed"] == true);
}
