#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "lewiskit/correspondence.hpp"
#include "lewiskit/parser.hpp"

using namespace lewiskit;
using C = ConditionId;

namespace {

const Registry& reg() {
    static Registry r = Registry::load_from_dir(default_data_dir());
    return r;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::ofstream out(name);
    out << body;
    return name;
}

}  // namespace

TEST_CASE("the shipped pairing table loads") {
    auto rows = load_pairing_table(default_data_dir() + "/conditions.tsv");
    REQUIRE(rows.size() == 16);
    CHECK(rows[0].conds == std::set<C>{C::brilliant});
    CHECK(rows[0].axiom == "Box");
    CHECK_FALSE(rows[0].finite_only);
    CHECK(rows[3].conds == std::set<C>{C::noetherian, C::semi_transitive});
    CHECK(rows[3].axiom == "Lbox");
    CHECK(rows[3].finite_only);
    int finite = 0;
    for (const auto& r : rows) {
        finite += r.finite_only;
        CHECK_NOTHROW(reg().fresh_instance(r.axiom));  // every axiom resolves
    }
    CHECK(finite == 3);
}

TEST_CASE("pairing table rejects malformed input") {
    CHECK_THROWS_AS(load_pairing_table("definitely_missing.tsv"), RegistryError);
    CHECK_THROWS_AS(load_pairing_table(write_temp("pt_bad1.tsv", "brilliant Box\n")),
                    RegistryError);
    CHECK_THROWS_AS(load_pairing_table(write_temp("pt_bad2.tsv", "brilliant Box 2\n")),
                    RegistryError);
    CHECK_THROWS_AS(load_pairing_table(write_temp("pt_bad3.tsv", "shiny Box 0\n")), ModelError);
    auto rows = load_pairing_table(
        write_temp("pt_ok.tsv", "# header\n\nstrong+dominated CBarr 0  # trailing\n"));
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].conds == std::set<C>{C::strong, C::dominated});
}

TEST_CASE("every pairing holds on all frames with up to two worlds") {
    auto rows = load_pairing_table(default_data_dir() + "/conditions.tsv");
    std::uint64_t total = count_frames(1, {}) + count_frames(2, {});
    for (const auto& row : rows) {
        CAPTURE(row.axiom);
        auto rep = correspondence_test(reg(), row.conds, row.axiom, 2);
        CHECK(rep.pass);
        CHECK(rep.frames_checked == total);
        CHECK_FALSE(rep.counterexample.has_value());
    }
}

TEST_CASE("spot checks at three worlds") {
    std::uint64_t total = count_frames(1, {}) + count_frames(2, {}) + count_frames(3, {});
    for (const char* axiom : {"Box", "Sbox", "4arr"}) {
        auto rows = load_pairing_table(default_data_dir() + "/conditions.tsv");
        for (const auto& row : rows)
            if (row.axiom == axiom) {
                auto rep = correspondence_test(reg(), row.conds, axiom, 3);
                CAPTURE(axiom);
                CHECK(rep.pass);
                CHECK(rep.frames_checked == total);
            }
    }
}

TEST_CASE("a wrong pairing is reported with a genuine counterexample") {
    auto rep = correspondence_test(reg(), {C::brilliant}, "4box", 2);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.counterexample.has_value());
    Frame fr(*rep.counterexample);
    bool c = check_conditions(fr.pre(), {C::brilliant});
    CHECK(c == rep.condition_held);
    CHECK(frame_validates(fr, reg().fresh_instance("4box")) == !c);
}

TEST_CASE("parallel runs agree with serial ones") {
    auto serial = correspondence_test(reg(), {C::gathering}, "4arr", 3, {}, 1);
    auto par = correspondence_test(reg(), {C::gathering}, "4arr", 3, {}, 4);
    CHECK(serial.pass);
    CHECK(par.pass);
    CHECK(serial.frames_checked == par.frames_checked);

    auto bad = correspondence_test(reg(), {C::brilliant}, "4box", 2, {}, 4);
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.counterexample.has_value());
    Frame fr(*bad.counterexample);
    CHECK(check_conditions(fr.pre(), {C::brilliant}) == bad.condition_held);
}

TEST_CASE("tight valuation caps surface as cap errors") {
    SearchLimits lim;
    lim.valuation_cap = 1;
    CHECK_THROWS_AS(correspondence_test(reg(), {C::brilliant}, "Box", 1, lim), CapExceeded);
}
