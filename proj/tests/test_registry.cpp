#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lewiskit/parser.hpp"
#include "lewiskit/print.hpp"
#include "lewiskit/registry.hpp"

using namespace lewiskit;

namespace {

const Registry& reg() {
    static Registry r = Registry::load_from_dir(default_data_dir());
    return r;
}

}  // namespace

TEST_CASE("the shipped data files load") {
    CHECK(reg().schemes().size() >= 45);
    CHECK(reg().logics().size() >= 30);
    for (const char* s : {"a1", "a10", "Kbox", "Lbox", "Tr", "Karr", "Di", "BL", "LB",
                          "Warr", "Marr", "Linarr", "Apparr", "C4arr", "Hug", "2.21",
                          "Auxp", "Auxp2", "KMlinB_assumed", "Box", "CBarr", "em"})
        CHECK(reg().find_scheme(s) != nullptr);
    for (const char* l : {"IPC", "iA0", "iA-", "iA", "wk", "iGL", "iGW", "iPreL",
                          "iSA", "PLAA", "mHC_arr", "KM_arr", "KM.lin_arr", "iK_box",
                          "iGL_box", "mHC_box", "KM.lin_box", "iGW.lin", "iA+C4box",
                          "iA+C4arr", "iPreL+CBbox", "iA+2.21+Auxp"})
        CHECK(reg().find_logic(l) != nullptr);
    CHECK(reg().find_scheme("nope") == nullptr);
    CHECK(reg().find_logic("nope") == nullptr);
    CHECK_THROWS_AS(reg().scheme("nope"), RegistryError);
    CHECK_THROWS_AS(reg().logic("nope"), RegistryError);
}

TEST_CASE("templates parse to the expected shapes") {
    CHECK(reg().scheme("a1").tmpl == parse("?phi -> (?psi -> ?phi)"));
    CHECK(reg().scheme("Tr").tmpl ==
          parse("(?phi ~> ?psi) -> ((?psi ~> ?chi) -> (?phi ~> ?chi))"));
    CHECK(reg().scheme("Lbox").tmpl == parse_normalized("[]([]?phi -> ?phi) -> []?phi"));
    CHECK(metavars(reg().scheme("Auxp").tmpl).empty());  // fixed-atom scheme
    CHECK(atoms(reg().scheme("Auxp").tmpl) == std::set<std::string>{"p"});
    CHECK(metavars(reg().scheme("Karr").tmpl) ==
          std::set<std::string>{"phi", "psi", "chi"});
}

TEST_CASE("logic structure") {
    const Logic& ipc = reg().logic("IPC");
    CHECK(ipc.rule_mp);
    CHECK_FALSE(ipc.rule_nec);
    CHECK(ipc.schemes.size() == 10);
    CHECK(ipc.has_scheme("a1"));
    CHECK_FALSE(ipc.has_scheme("Tr"));
    REQUIRE(ipc.semantic_class.has_value());
    CHECK(ipc.semantic_class->empty());  // every frame

    const Logic& igl = reg().logic("iGL");
    CHECK(igl.rule_nec);
    CHECK(igl.has_scheme("Larr"));
    CHECK(igl.semantic_class ==
          std::set<ConditionId>{ConditionId::noetherian, ConditionId::gathering});

    CHECK_FALSE(reg().logic("wk+em").semantic_class.has_value());
    CHECK_FALSE(reg().logic("iA+2.21+Auxp").semantic_class.has_value());
    CHECK(reg().logic("iPreL").semantic_class ==
          std::set<ConditionId>{ConditionId::noetherian, ConditionId::supergathering,
                                ConditionId::montagna});
    CHECK(reg().logic("mHC_box").semantic_class ==
          std::set<ConditionId>{ConditionId::strong, ConditionId::weakly_dominated});
}

TEST_CASE("fresh_instance replaces metavariables with distinct atoms") {
    Fm inst = reg().fresh_instance("Tr");
    CHECK_FALSE(has_metavars(inst));
    CHECK(atoms(inst).size() == 3);
    CHECK(inst->conn() == Conn::Imp);

    Fm apparr = reg().fresh_instance("Apparr");
    CHECK(atoms(apparr).size() == 2);
    CHECK(normalize(apparr)->conn() == Conn::Strictif);

    // fixed-atom schemes instantiate to themselves
    CHECK(reg().fresh_instance("Auxp") == reg().scheme("Auxp").tmpl);
    CHECK(reg().fresh_instance("a10") == top());
}

TEST_CASE("add_scheme and add_logic reject duplicates") {
    Registry r;
    r.add_scheme({"s1", parse("?phi -> ?phi")});
    CHECK_THROWS_AS(r.add_scheme({"s1", parse("?phi")}), RegistryError);
    r.add_logic({"l1", true, false, {"s1"}, std::nullopt});
    CHECK_THROWS_AS(r.add_logic({"l1", true, false, {}, std::nullopt}), RegistryError);
}

TEST_CASE("registry files reject malformed content") {
    std::string dir = default_data_dir();
    CHECK_THROWS_AS(Registry::load(dir + "/schemes.txt", dir + "/schemes.txt"),
                    RegistryError);  // schemes file is not a logics file
    CHECK_THROWS_AS(Registry::load_from_dir("/no/such/dir"), RegistryError);
}

TEST_CASE("v_instance builds the chi-translated disjunction") {
    Fm p = atom("p"), q = atom("q"), r = atom("r"), s = atom("s");
    Fm boxs = mk_strictif(top(), s);

    SUBCASE("no conjuncts") {
        Fm got = v_instance({}, p, boxs);
        Fm head = mk_imp(top(), mk_or(p, boxs));
        Fm disj = mk_or(mk_imp(top(), p), boxs);  // sigma case passes box through
        CHECK(got == mk_strictif(head, disj));
    }

    SUBCASE("one conjunct") {
        Fm chi = mk_imp(p, q);
        Fm got = v_instance({chi}, r, boxs);
        Fm head = mk_imp(chi, mk_or(r, boxs));
        Fm disj = mk_or(mk_or(mk_imp(chi, p), mk_imp(chi, r)), boxs);
        CHECK(got == mk_strictif(head, disj));
    }

    SUBCASE("two conjuncts fold to a conjunction") {
        Fm c1 = mk_imp(p, q), c2 = mk_imp(q, r);
        Fm chi = mk_and(c1, c2);
        Fm got = v_instance({c1, c2}, s, top());
        Fm head = mk_imp(chi, mk_or(s, top()));
        Fm disj = mk_or(mk_or(mk_or(mk_imp(chi, p), mk_imp(chi, q)), mk_imp(chi, s)), top());
        CHECK(got == mk_strictif(head, disj));
    }

    CHECK_THROWS_AS(v_instance({mk_and(p, q)}, r, s), RegistryError);
}
