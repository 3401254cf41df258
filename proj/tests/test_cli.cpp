#include <doctest.h>

#include <algorithm>

#include "hessk3/checks.hpp"

using namespace hessk3;

TEST_CASE("config validation") {
    RunConfig good;
    CHECK(validate_config(good).empty());

    RunConfig unknown;
    unknown.suites = {"lattice", "spectra"};
    CHECK(!validate_config(unknown).empty());

    RunConfig empty;
    empty.suites.clear();
    CHECK(!validate_config(empty).empty());

    RunConfig low_theta;
    low_theta.suites = {"theta"};
    low_theta.order = 8;
    CHECK(!validate_config(low_theta).empty());

    // a low order is fine when no series-based suite is requested
    RunConfig low_lattice;
    low_lattice.suites = {"lattice"};
    low_lattice.order = 8;
    CHECK(validate_config(low_lattice).empty());

    RunConfig bad_fmt;
    bad_fmt.format = "yaml";
    CHECK(!validate_config(bad_fmt).empty());

    RunConfig bad_order;
    bad_order.suites = {"periods"};
    bad_order.order = 0;
    CHECK(!validate_config(bad_order).empty());

    RunConfig bad_samples;
    bad_samples.samples = 0;
    CHECK(!validate_config(bad_samples).empty());
}

TEST_CASE("periods suite runs clean and sorted") {
    RunConfig cfg;
    cfg.suites = {"periods"};
    cfg.samples = 20;
    const Report rep = run_checks(cfg);
    REQUIRE(!rep.results.empty());
    CHECK(rep.count(CheckStatus::Fail) == 0);
    CHECK(std::is_sorted(rep.results.begin(), rep.results.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
    for (const auto& r : rep.results) {
        CHECK(r.id.rfind("periods.", 0) == 0);
        CHECK(!r.citation.empty());
    }
    // the sign convention and the series scale are recorded discrepancies
    CHECK(rep.count(CheckStatus::Finding) == 2);
}

TEST_CASE("invariants suite runs clean") {
    RunConfig cfg;
    cfg.suites = {"invariants"};
    cfg.samples = 20;
    const Report rep = run_checks(cfg);
    REQUIRE(!rep.results.empty());
    CHECK(rep.count(CheckStatus::Fail) == 0);
    CHECK(rep.count(CheckStatus::Finding) == 0);
}

TEST_CASE("summary counts match statuses") {
    RunConfig cfg;
    cfg.suites = {"lattice"};
    cfg.samples = 20;
    const Report rep = run_checks(cfg);
    int pass = 0, fail = 0, finding = 0, skipped = 0;
    for (const auto& r : rep.results) {
        CHECK(!r.citation.empty());
        switch (r.status) {
            case CheckStatus::Pass: ++pass; break;
            case CheckStatus::Fail: ++fail; break;
            case CheckStatus::Finding: ++finding; break;
            case CheckStatus::Skipped: ++skipped; break;
        }
    }
    CHECK(rep.count(CheckStatus::Pass) == pass);
    CHECK(rep.count(CheckStatus::Fail) == fail);
    CHECK(rep.count(CheckStatus::Finding) == finding);
    CHECK(rep.count(CheckStatus::Skipped) == skipped);
    CHECK(fail == 0);

    const nlohmann::json j = render_json(rep);
    CHECK(j["summary"]["pass"] == pass);
    CHECK(j["summary"]["fail"] == fail);
    CHECK(j["summary"]["finding"] == finding);
    CHECK(j["summary"]["skipped"] == skipped);
    CHECK(j["results"].size() == rep.results.size());
}

TEST_CASE("identical configs render identical json") {
    RunConfig cfg;
    cfg.suites = {"all"};
    cfg.order = 16;
    cfg.samples = 25;
    cfg.seed = 12345;
    const Report rep = run_checks(cfg);
    for (const auto& r : rep.results) CHECK(!r.citation.empty());
    const std::string a = render_json(rep).dump();
    const std::string b = render_json(run_checks(cfg)).dump();
    CHECK(a == b);
    CHECK(a.find("elapsed") == std::string::npos);

    RunConfig other = cfg;
    other.seed = 54321;
    const std::string c = render_json(run_checks(other)).dump();
    // sampled witnesses move with the seed even though every verdict is stable
    CHECK(c != a);
}

TEST_CASE("text rendering carries the verdict table") {
    RunConfig cfg;
    cfg.suites = {"periods"};
    cfg.samples = 5;
    const Report rep = run_checks(cfg);
    const std::string text = render_text(rep);
    CHECK(text.find("periods.gauss_2f1") != std::string::npos);
    CHECK(text.find("pass") != std::string::npos);
    CHECK(text.find("seed=") != std::string::npos);
}
