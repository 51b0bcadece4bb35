#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lewiskit/ipc.hpp"
#include "lewiskit/parser.hpp"
#include "lewiskit/print.hpp"
#include "lewiskit/registry.hpp"

using namespace lewiskit;

namespace {

bool proves(const char* text) { return ipc_proves(parse_normalized(text)); }

// depth-bounded random propositional formula over at most three atoms
Fm random_formula(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth == 0 ? 4 : 8);
    switch (pick(rng)) {
        case 0: return atom("p");
        case 1: return atom("q");
        case 2: return atom("r");
        case 3: return bot();
        case 4: return top();
        case 5: return mk_and(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 6: return mk_or(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        case 7: return mk_imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
        default: return mk_neg(random_formula(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("decision procedure on classic validities and non-validities") {
    CHECK(proves("p -> p"));
    CHECK(proves("#f -> p"));
    CHECK(proves("p -> q -> p"));
    CHECK(proves("(p -> q -> r) -> (p -> q) -> p -> r"));
    CHECK(proves("p /\\ q -> q /\\ p"));
    CHECK(proves("((p /\\ q) -> r) -> (p -> (q -> r))"));
    CHECK(proves("(p -> (q -> r)) -> ((p /\\ q) -> r)"));
    CHECK(proves("~~(p \\/ ~p)"));
    CHECK(proves("(~p \\/ ~q) -> ~(p /\\ q)"));
    CHECK(proves("(p \\/ (q /\\ r)) -> ((p \\/ q) /\\ (p \\/ r))"));
    CHECK(proves("((p \\/ q) /\\ (p \\/ r)) -> (p \\/ (q /\\ r))"));
    CHECK(proves("~~~p -> ~p"));
    CHECK(proves("#t"));

    CHECK_FALSE(proves("p"));
    CHECK_FALSE(proves("#f"));
    CHECK_FALSE(proves("p \\/ ~p"));
    CHECK_FALSE(proves("~~p -> p"));
    CHECK_FALSE(proves("((p -> q) -> p) -> p"));
    CHECK_FALSE(proves("~p \\/ ~~p"));
    CHECK_FALSE(proves("(p -> q) \\/ (q -> p)"));
    CHECK_FALSE(proves("~(p /\\ q) -> (~p \\/ ~q)"));
}

TEST_CASE("the shipped intuitionistic axiom schemes are provable") {
    Registry reg = Registry::load_from_dir(default_data_dir());
    for (const char* name : {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "a10"})
        CHECK(ipc_proves(reg.fresh_instance(name)));
    CHECK_FALSE(ipc_proves(reg.fresh_instance("em")));
    CHECK_FALSE(ipc_proves(reg.fresh_instance("peirce")));
}

TEST_CASE("modal material is rejected") {
    CHECK_THROWS_AS(ipc_proves(parse_normalized("p ~> q")), IpcError);
    CHECK_THROWS_AS(ipc_proves(parse_normalized("[]p -> p")), IpcError);
    CHECK_THROWS_AS(ipc_proves(parse("?x -> ?x")), IpcError);
    CHECK_THROWS_AS(find_ipc_countermodel(parse_normalized("p ~> q"), 2), IpcError);
    CHECK_THROWS_AS(ipc_proves({parse_normalized("[]p")}, top()), IpcError);
}

TEST_CASE("sequent interface and the deduction property") {
    auto pq = parse_normalized("p -> q");
    CHECK(ipc_proves({pq, atom("p")}, atom("q")));
    CHECK(ipc_proves({bot()}, atom("q")));
    CHECK(ipc_proves({}, parse_normalized("p -> p")));
    CHECK_FALSE(ipc_proves({atom("p")}, atom("q")));
    CHECK(ipc_proves({atom("p"), atom("p")}, atom("p")));  // duplicates are fine

    std::mt19937 rng(123);
    for (int i = 0; i < 60; ++i) {
        Fm h = random_formula(rng, 3);
        Fm g = random_formula(rng, 3);
        CHECK(ipc_proves({h}, g) == ipc_proves(mk_imp(h, g)));
    }
}

TEST_CASE("equivalence checks") {
    CHECK(ipc_equiv(parse_normalized("p /\\ q"), parse_normalized("q /\\ p")));
    CHECK(ipc_equiv(parse_normalized("~~~p"), parse_normalized("~p")));
    CHECK(ipc_equiv(parse_normalized("p -> (q -> r)"), parse_normalized("(p /\\ q) -> r")));
    CHECK_FALSE(ipc_equiv(atom("p"), parse_normalized("~~p")));
    CHECK_FALSE(ipc_equiv(top(), bot()));
}

TEST_CASE("rooted poset counts are pinned") {
    std::size_t expect[] = {0, 1, 1, 2, 5, 16, 63, 318, 2045};
    for (int n = 0; n <= 8; ++n) CHECK(rooted_poset_count(n) == expect[n]);
    CHECK_THROWS_AS(rooted_poset_count(9), CapExceeded);
    CHECK_THROWS_AS(find_ipc_countermodel(atom("p"), 9), CapExceeded);
}

TEST_CASE("countermodel search finds and confirms refutations") {
    CHECK_FALSE(find_ipc_countermodel(parse_normalized("p -> p"), 8).has_value());
    CHECK_FALSE(find_ipc_countermodel(parse_normalized("~~(p \\/ ~p)"), 8).has_value());

    // excluded middle holds at a single (classical) point but dies on a chain
    Fm em = parse_normalized("p \\/ ~p");
    CHECK_FALSE(find_ipc_countermodel(em, 1).has_value());
    auto got = find_ipc_countermodel(em, 2);
    REQUIRE(got.has_value());
    CHECK(got->model.n() == 2);
    CHECK(got->world == 0);
    CHECK_FALSE(forces(got->model, got->world, em));
    for (Mask row : got->model.pre().lt) CHECK(row == 0);  // purely intuitionistic model

    auto peirce = find_ipc_countermodel(parse_normalized("((p -> q) -> p) -> p"), 8);
    REQUIRE(peirce.has_value());
    CHECK(peirce->model.n() == 2);

    // needs a genuine fork, not a chain
    auto weak_em = find_ipc_countermodel(parse_normalized("~p \\/ ~~p"), 8);
    REQUIRE(weak_em.has_value());
    CHECK(weak_em->model.n() == 3);
}

TEST_CASE("prover and bounded semantics agree on a random corpus") {
    std::mt19937 rng(20240817);
    int valid = 0, invalid = 0;
    for (int i = 0; i < 500; ++i) {
        Fm f = random_formula(rng, 4);
        CAPTURE(print(f));
        bool proved = ipc_proves(f);
        auto counter = find_ipc_countermodel(f, 8);
        CHECK(proved == !counter.has_value());
        if (counter) {
            CHECK_FALSE(forces(counter->model, counter->world, f));
            ++invalid;
        } else {
            ++valid;
        }
    }
    // the corpus genuinely exercises both outcomes
    CHECK(valid > 50);
    CHECK(invalid > 50);
}
