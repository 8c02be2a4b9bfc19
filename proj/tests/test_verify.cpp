#include "motzhankel/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <stdexcept>

using namespace motzhankel;

namespace {

SweepConfig config(std::vector<std::string> checks, int n_max, int k_max) {
    SweepConfig cfg;
    cfg.checks = std::move(checks);
    cfg.n_max = n_max;
    cfg.k_max = k_max;
    return cfg;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("every known check runs and passes on a small grid") {
    SweepConfig cfg = config(known_checks(), 5, 2);
    const Report r = run_verify(cfg);
    CHECK(r.ok());
    CHECK(r.count("fail") == 0);
    CHECK(r.cells.size() > 500);
}

TEST_CASE("parallel and serial sweeps produce identical reports") {
    SweepConfig cfg = config({"T3", "T4", "C14", "lemma8", "chu"}, 6, 2);
    const auto serial = nlohmann::json::parse(render(run_verify(cfg), OutputFormat::Json));
    cfg.parallel = true;
    cfg.workers = 4;
    const auto parallel = nlohmann::json::parse(render(run_verify(cfg), OutputFormat::Json));
    CHECK(parallel["cells"] == serial["cells"]);
    CHECK(parallel["summary"] == serial["summary"]);
}

TEST_CASE("JSON report schema") {
    const Report r = run_verify(config({"T1"}, 3, 1));
    const auto j = nlohmann::json::parse(render(r, OutputFormat::Json));
    CHECK(j["command"] == "verify");
    CHECK(j["config"]["n_max"] == 3);
    REQUIRE(j["cells"].size() == 6);
    for (const auto& cell : j["cells"]) {
        for (const char* key : {"params", "status", "lhs", "rhs", "diff"}) CHECK(cell.contains(key));
        CHECK(cell["status"] == "pass");
    }
    CHECK(j["cells"][0]["params"]["n"] == 1);
    CHECK(j["summary"]["pass"] == 6);
    CHECK(j["summary"]["ok"] == true);
}

TEST_CASE("CSV and text renderings") {
    const Report r = run_verify(config({"lemma6"}, 3, 0));
    const std::string csv = render(r, OutputFormat::Csv);
    CHECK(csv.rfind("check,params,status,lhs,rhs,diff,note\n", 0) == 0);
    CHECK(csv.find("lemma6,\"n=3\",pass") != std::string::npos);
    const std::string text = render(r, OutputFormat::Text);
    CHECK(text.find("PASS lemma6 n=2") != std::string::npos);
    CHECK(text.find("summary: 3 pass, 0 fail, 0 expected mismatch") != std::string::npos);
}

TEST_CASE("literal-table discrepancies do not fail a sweep") {
    const Report r = run_verify(config({"C16"}, 9, 4));
    CHECK(r.ok());
    CHECK(r.count("expected_mismatch") > 0);
}

TEST_CASE("caps and validation") {
    CHECK_THROWS_AS(validate(config({"T3"}, 13, 1)), std::invalid_argument);
    CHECK_NOTHROW(validate(config({"C13"}, 24, 1)));
    CHECK_THROWS_AS(validate(config({"C13"}, 25, 1)), std::invalid_argument);
    SweepConfig unsafe = config({"T3"}, 13, 1);
    unsafe.unsafe = true;
    CHECK_NOTHROW(validate(unsafe));
    CHECK_THROWS_AS(validate(config({"T9"}, 3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(validate(config({}, 3, 1)), std::invalid_argument);
    SweepConfig shifts = config({"factorization"}, 3, 1);
    shifts.shifts = {2};
    CHECK_THROWS_AS(validate(shifts), std::invalid_argument);
    CHECK(is_symbolic_check("T1"));
    CHECK_FALSE(is_symbolic_check("C18"));
}

TEST_CASE("output format names") {
    CHECK(parse_output_format("json") == OutputFormat::Json);
    CHECK(parse_output_format("CSV") == OutputFormat::Csv);
    CHECK(parse_output_format("text") == OutputFormat::Text);
    CHECK_THROWS(parse_output_format("xml"));
}

}  // TEST_SUITE
