#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lewiskit/parser.hpp"
#include "lewiskit/proof.hpp"

using namespace lewiskit;

namespace {

const Registry& reg() {
    static Registry r = Registry::load_from_dir(default_data_dir());
    return r;
}

Proof from_text(const std::string& text) {
    std::istringstream in(text);
    return read_proof(in);
}

const char* kIdentity =
    "logic: IPC\n"
    "goal: p -> p\n"
    "1. ax a2 {?phi=p, ?psi=p -> p, ?chi=p}\n"
    "2. ax a1 {?phi=p, ?psi=p -> p}\n"
    "3. mp 2 1\n"
    "4. ax a1 {?phi=p, ?psi=p}\n"
    "5. mp 4 3\n";

const char* kTopArrow =
    "goal: #t ~> #t\n"
    "1. ax a2 {?phi=#t, ?psi=#t -> #t, ?chi=#t}\n"
    "2. ax a1 {?phi=#t, ?psi=#t -> #t}\n"
    "3. mp 2 1\n"
    "4. ax a1 {?phi=#t, ?psi=#t}\n"
    "5. mp 4 3\n"
    "6. nec 5\n";

}  // namespace

TEST_CASE("a complete modus-ponens proof is accepted") {
    Proof pr = from_text(kIdentity);
    CHECK(pr.logic == "IPC");
    CheckResult res = check_proof(reg(), "IPC", pr);
    REQUIRE(res.accepted);
    CHECK(res.reason.empty());
    // conclusions are filled in along the way
    CHECK(pr.steps[2].conclusion == parse_normalized("(p -> (p -> p)) -> (p -> p)"));
    CHECK(pr.steps[4].conclusion == parse_normalized("p -> p"));
}

TEST_CASE("necessitation requires the rule and an implication premise") {
    Proof pr = from_text(kTopArrow);
    CHECK(check_proof(reg(), "iA0", pr).accepted);

    Proof no_rule = from_text(kTopArrow);
    CheckResult res = check_proof(reg(), "IPC", no_rule);
    CHECK_FALSE(res.accepted);
    CHECK(res.step == 6);
    CHECK(res.reason.find("necessitation") != std::string::npos);

    Proof not_imp = from_text(
        "goal: #t ~> #t\n"
        "1. ax a10\n"
        "2. nec 1\n");
    CHECK_FALSE(check_proof(reg(), "iA0", not_imp).accepted);
}

TEST_CASE("axiom steps must cite schemes of the logic") {
    Proof pr = from_text(
        "goal: (p ~> q) -> ((q ~> r) -> (p ~> r))\n"
        "1. ax Tr {?phi=p, ?psi=q, ?chi=r}\n");
    CHECK(check_proof(reg(), "iA0", pr).accepted);

    Proof wrong_logic = from_text(
        "goal: (p ~> q) -> ((q ~> r) -> (p ~> r))\n"
        "1. ax Tr {?phi=p, ?psi=q, ?chi=r}\n");
    CheckResult res = check_proof(reg(), "IPC", wrong_logic);
    CHECK_FALSE(res.accepted);
    CHECK(res.step == 1);
    CHECK(res.reason.find("not part of logic") != std::string::npos);

    Proof unknown = from_text("goal: p\n1. ax zz\n");
    CHECK(check_proof(reg(), "IPC", unknown).reason.find("unknown scheme") !=
          std::string::npos);

    CheckResult bad_logic = check_proof(reg(), "nope", pr);
    CHECK_FALSE(bad_logic.accepted);
    CHECK(bad_logic.reason.find("unknown logic") != std::string::npos);
}

TEST_CASE("substitution mismatches are rejected") {
    // missing binding
    Proof missing = from_text("goal: p -> q -> p\n1. ax a1 {?phi=p}\n");
    CheckResult r1 = check_proof(reg(), "IPC", missing);
    CHECK_FALSE(r1.accepted);
    CHECK(r1.reason.find("substitution mismatch") != std::string::npos);

    // binding a metavariable the scheme does not have
    Proof extra = from_text("goal: #t\n1. ax a10 {?phi=p}\n");
    CheckResult r2 = check_proof(reg(), "IPC", extra);
    CHECK_FALSE(r2.accepted);
    CHECK(r2.reason.find("no metavariable") != std::string::npos);

    // fixed-atom schemes take no binding at all
    Proof aux = from_text(
        "goal: (~~p ~> ~([]p -> []~p)) ~> (p ~> []p)\n"
        "1. ax Auxp\n");
    CHECK(check_proof(reg(), "iA+2.21+Auxp", aux).accepted);
    Proof aux_bound = from_text(
        "goal: (~~q ~> ~([]q -> []~q)) ~> (q ~> []q)\n"
        "1. ax Auxp {?phi=q}\n");
    CHECK_FALSE(check_proof(reg(), "iA+2.21+Auxp", aux_bound).accepted);
    // Auxp2 lives in the registry but no logic carries it as an axiom
    CHECK(reg().find_scheme("Auxp2") != nullptr);
    for (const Logic& l : reg().logics()) CHECK_FALSE(l.has_scheme("Auxp2"));
}

TEST_CASE("modus ponens premise discipline") {
    // j does not conclude an implication with antecedent i
    Proof shape = from_text(
        "goal: p\n"
        "1. ax a10\n"
        "2. ax a10\n"
        "3. mp 1 2\n");
    CheckResult r1 = check_proof(reg(), "IPC", shape);
    CHECK_FALSE(r1.accepted);
    CHECK(r1.step == 3);
    CHECK(r1.reason.find("MP shape mismatch") != std::string::npos);

    // forward reference
    Proof fwd = from_text(
        "goal: p\n"
        "1. ax a10\n"
        "2. mp 1 3\n");
    CHECK(check_proof(reg(), "IPC", fwd).reason.find("dangling") != std::string::npos);

    // self reference
    Proof self = from_text("goal: p\n1. mp 1 1\n");
    CHECK_FALSE(check_proof(reg(), "IPC", self).accepted);
}

TEST_CASE("the final step must land on the goal") {
    Proof pr = from_text(
        "goal: q -> q\n"
        "1. ax a2 {?phi=p, ?psi=p -> p, ?chi=p}\n"
        "2. ax a1 {?phi=p, ?psi=p -> p}\n"
        "3. mp 2 1\n"
        "4. ax a1 {?phi=p, ?psi=p}\n"
        "5. mp 4 3\n");
    CheckResult res = check_proof(reg(), "IPC", pr);
    CHECK_FALSE(res.accepted);
    CHECK(res.reason.find("does not match goal") != std::string::npos);

    // goals are compared after normalization: the [] spelling unfolds to #t ~>
    Proof boxed = from_text(
        "goal: [](p -> q -> p)\n"
        "1. ax a1 {?phi=p, ?psi=q}\n"
        "2. ax a1 {?phi=p -> q -> p, ?psi=#t}\n"
        "3. mp 1 2\n"
        "4. nec 3\n");
    CHECK(check_proof(reg(), "iA0", boxed).accepted);
}

TEST_CASE("proof file parsing") {
    Proof pr = from_text(kIdentity);
    CHECK(pr.steps.size() == 5);
    CHECK(pr.steps[0].kind == ProofStep::Kind::Ax);
    CHECK(pr.steps[0].scheme == "a2");
    CHECK(pr.steps[0].binding.at("psi") == parse_normalized("p -> p"));
    CHECK(pr.steps[2].kind == ProofStep::Kind::Mp);
    CHECK(pr.steps[2].i == 2);
    CHECK(pr.steps[2].j == 1);

    CHECK_THROWS_AS(from_text("1. ax a10\n"), ProofFileError);           // no goal
    CHECK_THROWS_AS(from_text("goal: p\n2. ax a10\n"), ProofFileError);  // numbering
    CHECK_THROWS_AS(from_text("goal: p\n1. zz 1\n"), ProofFileError);
    CHECK_THROWS_AS(from_text("goal: p\n1. mp 1\n"), ProofFileError);
    CHECK_THROWS_AS(from_text("goal: p\n1. ax a1 {?phi}\n"), ProofFileError);
    CHECK_THROWS_AS(from_text("goal: p -> \n1. ax a10\n"), ProofFileError);
    CHECK_THROWS_AS(from_text("goal: p\ngoal: q\n1. ax a10\n"), ProofFileError);
}

TEST_CASE("write_proof round-trips") {
    Proof pr = from_text(kIdentity);
    REQUIRE(check_proof(reg(), "IPC", pr).accepted);
    Proof back = from_text(write_proof(pr));
    CHECK(back.goal == pr.goal);
    CHECK(back.logic == pr.logic);
    REQUIRE(back.steps.size() == pr.steps.size());
    for (std::size_t i = 0; i < pr.steps.size(); ++i) {
        CHECK(back.steps[i].kind == pr.steps[i].kind);
        CHECK(back.steps[i].scheme == pr.steps[i].scheme);
        CHECK(back.steps[i].binding == pr.steps[i].binding);
        CHECK(back.steps[i].i == pr.steps[i].i);
        CHECK(back.steps[i].j == pr.steps[i].j);
    }
    CHECK(check_proof(reg(), "IPC", back).accepted);
}
