#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heun/tables.hpp"

using namespace heun;

namespace {
const Fixtures& fixtures() {
    static Fixtures fx = load_fixtures();
    return fx;
}
}  // namespace

TEST_CASE("fixture files load with the expected shape") {
    const Fixtures& fx = fixtures();
    CHECK(fx.table1.size() == 38);
    CHECK(fx.table1b.size() == 7);
    CHECK(fx.table2.size() == 14);
    CHECK(fx.weierstrass.table1_row == 7);
    std::set<int> quadratic_rows;
    for (const auto& r : fx.table1)
        if (r.field.is_quadratic()) quadratic_rows.insert(r.index);
    CHECK(quadratic_rows ==
          std::set<int>{1, 4, 6, 7, 11, 18, 20, 21, 26, 28, 33, 36, 37, 38});
}

TEST_CASE("every table 1 row passes both theta identities") {
    const Fixtures& fx = fixtures();
    auto samples = default_samples();
    for (const auto& row : fx.table1) {
        for (const auto& rep : verify_table1_row(fx, row, samples)) {
            if (rep.stage != "theta-identities") continue;
            INFO("row ", rep.row, ": ", rep.detail);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("rows with a known cover reproduce end to end") {
    const Fixtures& fx = fixtures();
    auto samples = default_samples();
    int covered = 0;
    for (const auto& row : fx.table1) {
        if (row.jref.empty()) continue;
        ++covered;
        for (const auto& rep : verify_table1_row(fx, row, samples)) {
            INFO("row ", rep.row, " stage ", rep.stage, ": ", rep.detail);
            CHECK(rep.pass);
        }
    }
    CHECK(covered == 6);  // rows 7 and 31..35
}

TEST_CASE("all seven family rows verify") {
    const Fixtures& fx = fixtures();
    for (const auto& row : fx.table1b) {
        for (const auto& rep : verify_table1b_row(row)) {
            INFO("row ", rep.row, " stage ", rep.stage, ": ", rep.detail);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("lame table splits into verified and quarantined rows") {
    const Fixtures& fx = fixtures();
    std::set<std::string> quarantined, passed;
    for (const auto& row : fx.table2) {
        auto reports = verify_table2_row(fx, row);
        bool q = false, all = true;
        for (const auto& rep : reports) {
            if (rep.quarantined) q = true;
            if (!rep.quarantined && !rep.pass) all = false;
            INFO("row ", rep.row, " stage ", rep.stage, ": ", rep.detail);
        }
        if (q)
            quarantined.insert(row.label);
        else {
            CHECK(all);
            if (all) passed.insert(row.label);
        }
    }
    // the printed source rows that are internally inconsistent or underivable
    CHECK(quarantined ==
          std::set<std::string>{"12", "14a", "14b", "26a", "26b", "32", "36"});
    CHECK(passed == std::set<std::string>{"1", "5", "6", "11", "27", "28", "33"});
}

TEST_CASE("weierstrass family end-to-end report") {
    const Fixtures& fx = fixtures();
    for (const auto& rep : verify_weierstrass(fx)) {
        INFO("stage ", rep.stage, ": ", rep.detail);
        CHECK(rep.pass);
    }
}

TEST_CASE("aggregate verification passes modulo quarantines") {
    const Fixtures& fx = fixtures();
    auto reports = verify_all(fx);
    CHECK(all_passed(reports));
    long quarantined = 0;
    for (const auto& r : reports) quarantined += r.quarantined;
    CHECK(quarantined == 7);
}
