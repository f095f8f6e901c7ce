#include <doctest.h>

#include <sstream>

#include "apolar/report.hpp"

using namespace apolar;

TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.e = 3;
    cfg.s = 4;
    CHECK_NOTHROW(cfg.validate());
    cfg.s = 3;
    CHECK_THROWS_AS(cfg.validate(), SocleDegreeExcluded);
    cfg.allow_s3 = true;
    CHECK_NOTHROW(cfg.validate());
    cfg.s = 1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.s = 4;
    cfg.prime = 3; // not > s
    CHECK_THROWS_AS(cfg.validate(), BadPrime);
    cfg.prime = 32003;
    cfg.e = 1;
    CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("default truncation by embedding dimension") {
    RunConfig cfg;
    cfg.e = 2;
    CHECK(cfg.effective_trunc() == 5);
    cfg.e = 4;
    CHECK(cfg.effective_trunc() == 4);
    cfg.trunc = 7;
    CHECK(cfg.effective_trunc() == 7);
}

TEST_CASE("sampling a compressed instance records retries") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 1;
    Instance inst = sample_compressed_instance(cfg);
    CHECK(inst.compressedness.compressed());
    CHECK(inst.retries >= 0);
    CHECK(inst.algebra->hilbert_function() == std::vector<std::int64_t>{1, 2, 3, 2, 1});
}

TEST_CASE("main suite on the smallest even instance") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 1;
    cfg.trunc = 6;
    VerificationReport rep = run_main_theorem_suite(cfg);
    CHECK(rep.passed());
    CHECK(rep.exit_code() == 0);
    const CheckRecord* d = rep.find("denominator-t1");
    REQUIRE(d != nullptr);
    CHECK(d->witness["d_r"] == nlohmann::json({1, 0, -2, 0, 1}));
    const CheckRecord* po = rep.find("po-r-k-measured");
    REQUIRE(po != nullptr);
    CHECK(po->witness["coeffs"] == nlohmann::json({1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("main suite on an odd instance records the refusal") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 5;
    cfg.seed = 1;
    cfg.trunc = 4;
    VerificationReport rep = run_main_theorem_suite(cfg);
    CHECK(rep.passed());
    const CheckRecord* refusal = rep.find("denominator-t2-refusal");
    REQUIRE(refusal != nullptr);
    CHECK(refusal->status == "pass");
}

TEST_CASE("reports are byte-identical for identical configs") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 9;
    cfg.trunc = 3;
    std::string a = run_main_theorem_suite(cfg).to_json().dump();
    std::string b = run_main_theorem_suite(cfg).to_json().dump();
    CHECK(a == b);
}

TEST_CASE("golod powers suite on a small instance") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 1;
    cfg.trunc = 4;
    VerificationReport rep = run_golod_powers_suite(cfg);
    CHECK(rep.passed());
    CHECK(rep.find("golod-power-2") != nullptr);
    CHECK(rep.find("golod-power-4") != nullptr);
}

TEST_CASE("socle quotient suite on a small instance") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 1;
    cfg.trunc = 4;
    VerificationReport rep = run_socle_quotient_suite(cfg);
    CHECK(rep.passed());
    REQUIRE(rep.find("socle-quotient-po-q") != nullptr);
}

TEST_CASE("map check reports") {
    RunConfig cfg;
    cfg.e = 2;
    cfg.s = 4;
    cfg.seed = 1;
    cfg.trunc = 3;
    VerificationReport nu = run_map_checks(cfg, MapCheck::nu);
    CHECK(nu.passed());
    CHECK(nu.suite == "maps-nu");
    VerificationReport rho = run_map_checks(cfg, MapCheck::rho);
    CHECK(rho.passed());
}

TEST_CASE("report serialization shape") {
    VerificationReport rep;
    rep.suite = "main";
    rep.e = 2;
    rep.s = 4;
    rep.prime = 32003;
    rep.seed = 5;
    rep.add("alpha", "first check", true, {{"value", 3}});
    rep.add("beta", "second check", false);
    nlohmann::json j = rep.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["overall"] == "fail");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "alpha");
    CHECK(rep.exit_code() == 1);

    rep.checks[1].status = "inconclusive";
    CHECK(rep.exit_code() == 2);
    CHECK(rep.overall() == "inconclusive");

    std::ostringstream csv;
    rep.write_csv(csv);
    CHECK(csv.str().find("alpha") != std::string::npos);
    CHECK(csv.str().find("inconclusive") != std::string::npos);
}
