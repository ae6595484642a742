#include <catch2/catch_amalgamated.hpp>

#include "ringplane/verify.hpp"

using namespace ringplane;

TEST_CASE("the claim suite passes at oracle depth for q=2") {
    const GaloisField gf(2, 1);
    const VerifyReport rep = run_verify(gf, VerifyDepth::Oracle);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
    CHECK(rep.claims.size() >= 30);
}

TEST_CASE("the claim suite passes at definitional depth for q=3") {
    const GaloisField gf(3, 1);
    const VerifyReport rep = run_verify(gf, VerifyDepth::Definitional);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
}

TEST_CASE("the claim suite passes at fast depth for q=4") {
    const GaloisField gf(2, 2);
    const VerifyReport rep = run_verify(gf, VerifyDepth::Fast);
    INFO(rep.to_text());
    CHECK(rep.all_pass());
}

TEST_CASE("oracle depth refuses q above five") {
    const GaloisField gf(7, 1);
    CHECK_THROWS_AS(run_verify(gf, VerifyDepth::Oracle), capacity_error);
}

TEST_CASE("reports are byte-identical across fresh runs") {
    const std::string a = run_verify(GaloisField(3, 1), VerifyDepth::Definitional).to_text();
    const std::string b = run_verify(GaloisField(3, 1), VerifyDepth::Definitional).to_text();
    CHECK(a == b);
    const auto ja = run_verify(GaloisField(2, 1), VerifyDepth::Fast).to_json().dump(2);
    const auto jb = run_verify(GaloisField(2, 1), VerifyDepth::Fast).to_json().dump(2);
    CHECK(ja == jb);
}

TEST_CASE("stats in full mode") {
    const StatsReport rep = compute_stats(GaloisField(2, 1));
    CHECK(rep.materialized);
    CHECK(rep.all_match());
    // the worked q=2 numbers
    for (const StatsRow& row : rep.rows) {
        if (row.name == "points") CHECK(row.observed == 49);
        if (row.name == "points-per-line") CHECK(row.observed == 9);
        if (row.name == "neighbourhood-size") CHECK(row.observed == 12);
        if (row.name == "points-type-ii") CHECK(row.observed == 12);
    }
}

TEST_CASE("stats falls back to streaming above the materialization bound") {
    const StatsReport rep = compute_stats(GaloisField(17, 1));
    CHECK_FALSE(rep.materialized);
    CHECK(rep.all_match());
    const StatsReport tiny = compute_stats(GaloisField(3, 1), 10);
    CHECK_FALSE(tiny.materialized);
    CHECK(tiny.all_match());
}
