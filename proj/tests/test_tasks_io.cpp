#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "arcforge/tasks.hpp"

using namespace arcforge;

TEST_CASE("registry dispatch and verdict codes") {
    CHECK(task_ids().size() == 18);
    CHECK_THROWS_AS(run_task("no-such-task", {}), std::invalid_argument);
    CHECK(verdict_exit_code(Verdict::pass) == 0);
    CHECK(verdict_exit_code(Verdict::fail) == 1);
    CHECK(verdict_exit_code(Verdict::report_only) == 2);
    const auto rep = run_task("genus", {});
    CHECK(rep.verdict == Verdict::pass);
    const auto parsed = nlohmann::json::parse(rep.json);
    CHECK(parsed.at("task") == "genus");
    CHECK(parsed.contains("claim"));
    CHECK(parsed.contains("checks"));
    CHECK(parsed.at("verdict") == "PASS");
    for (const auto& c : parsed.at("checks")) {
        CHECK(c.contains("measured"));
        CHECK(c.contains("provenance"));
    }
}

TEST_CASE("open cases run report-only") {
    TaskParams p;
    p.q = 2;
    p.r = 3;
    const auto rep = run_task("herm-complete", p);
    CHECK(rep.verdict == Verdict::report_only);
    CHECK(verdict_exit_code(rep.verdict) == 2);
}

TEST_CASE("single-instance task parameters") {
    TaskParams p;
    p.q = 2;
    p.r = 4;
    CHECK(run_task("herm-complete", p).verdict == Verdict::pass);
    TaskParams s;
    s.q = 5;
    CHECK(run_task("bks-spectrum", s).verdict == Verdict::pass);
}

TEST_CASE("exports are deterministic byte for byte") {
    const Arc arc = hermitian_arc(2, 1);
    CHECK(arc_to_json(arc) == arc_to_json(hermitian_arc(2, 1)));
    const auto F = GF::make(3, 4);
    u64 a = 1, b = 1;
    while (on_hermitian_curve(*F, 3, a, b)) ++b;
    const auto r1 = specialization_census(CensusFamily::hermitian_line, F, 3, a, b);
    const auto r2 = specialization_census(CensusFamily::hermitian_line, F, 3, a, b, false, 4);
    CHECK(r1.to_csv() == r2.to_csv());
    CHECK(r1.to_json() == r2.to_json());
    const auto d1 = pgl2_distribution(4).to_json();
    CHECK(d1 == pgl2_distribution(4).to_json());
}

TEST_CASE("task reports are valid json with self-description") {
    TaskParams p;
    p.q = 3;
    const auto rep = run_task("bks-spectrum", p);
    const auto parsed = nlohmann::json::parse(rep.json);
    const auto& checks = parsed.at("checks");
    REQUIRE(!checks.empty());
    CHECK(checks[0].contains("expected"));
    CHECK(checks[0].at("ok") == true);
}
