#include "doctest.h"
#include "hikita/exact/error.hpp"
#include "hikita/report/suites.hpp"
#include "json.hpp"

using namespace hikita::report;

TEST_CASE("check outcomes") {
    Report rep;
    rep.command = "demo";
    rep.run("ok", [] { return std::optional<std::string>(); });
    rep.run("bad", [] { return std::optional<std::string>("lhs != rhs"); });
    rep.run("silent failure", [] { return std::optional<std::string>(""); });
    rep.run("throws", []() -> std::optional<std::string> { throw hikita::DomainError("boom"); });
    rep.skip("later", "not applicable");
    CHECK_FALSE(rep.passed());
    CHECK(rep.count(Status::Pass) == 1);
    CHECK(rep.count(Status::Fail) == 3);
    CHECK(rep.count(Status::Skipped) == 1);
    for (const auto& c : rep.checks)
        if (c.status == Status::Fail) CHECK_FALSE(c.witness.empty());
    CHECK(rep.checks[3].witness == "exception: boom");
    for (const auto& c : rep.checks) CHECK(c.ms == 0);
}

TEST_CASE("json layout") {
    Params p;
    p.n = 2;
    p.r = 2;
    p.cutoff = 8;
    auto rep = run_suite("appendix", p);
    auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "appendix");
    CHECK(j["params"]["n"] == 2);
    CHECK(j["params"]["cutoff"] == 8);
    CHECK(j["params"]["point"].is_null());
    CHECK(j["total_ms"] == 0);
    CHECK_FALSE(j.contains("matrices"));
    REQUIRE(j["checks"].size() == rep.checks.size());
    for (const auto& c : j["checks"]) {
        CHECK(c["status"] == "pass");
        CHECK_FALSE(c.contains("witness"));
    }
    CHECK(to_json(rep) == to_json(run_suite("appendix", p)));
}

TEST_CASE("matrices are dumped on request") {
    Params p;
    p.n = 2;
    p.dump_matrices = true;
    auto j = nlohmann::json::parse(to_json(run_suite("calogero", p)));
    REQUIRE(j.contains("matrices"));
    CHECK(j["matrices"]["X[2]"] == nlohmann::json::array({{"0", "1"}, {"0", "0"}}));
    CHECK(j["matrices"].size() == 4);
}

TEST_CASE("csv and text renderings") {
    Report rep;
    rep.command = "demo";
    rep.run("a, b", [] { return std::optional<std::string>("say \"no\""); });
    CHECK(to_csv(rep) == "name,status,witness,ms\n\"a, b\",fail,\"say \"\"no\"\"\",0\n");
    CHECK(to_text(rep) == "FAIL a, b: say \"no\"\ndemo: 0 passed, 1 failed, 0 skipped\n");
}

TEST_CASE("suite dispatch") {
    CHECK(suite_names().size() == 8);
    Params p;
    CHECK_THROWS_AS(run_suite("nonsense", p), hikita::DomainError);
    p.n = 0;
    CHECK_THROWS_AS(run_suite("calogero", p), hikita::DomainError);
    p.n = 3;
    p.cutoff = 2;
    CHECK_THROWS_AS(run_suite("appendix", p), hikita::DomainError);

    Params main;
    main.n = 3;
    main.r = 2;
    auto rep = run_suite("main-theorem", main);
    CHECK(rep.checks.size() == 6);
    CHECK(rep.passed());

    Params seeded;
    seeded.n = 2;
    seeded.r = 2;
    seeded.seed = 5;
    CHECK(to_json(run_suite("dimensions", seeded)) == to_json(run_suite("dimensions", seeded)));
    seeded.point = "kappa=1/2,a1=3";
    auto at_point = run_suite("dimensions", seeded);
    CHECK(at_point.passed());
    seeded.point = "kappa=1/2";
    CHECK_THROWS_AS(run_suite("dimensions", seeded), hikita::DomainError);
}
