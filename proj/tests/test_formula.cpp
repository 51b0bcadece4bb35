#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lewiskit/formula.hpp"
#include "lewiskit/print.hpp"

using namespace lewiskit;

TEST_CASE("interning gives pointer identity for equal trees") {
    CHECK(atom("p") == atom("p"));
    CHECK(atom("p") != atom("q"));
    CHECK(bot() != top());
    CHECK(mk_and(atom("p"), atom("q")) == mk_and(atom("p"), atom("q")));
    CHECK(mk_and(atom("p"), atom("q")) != mk_and(atom("q"), atom("p")));
    CHECK(mk_imp(atom("p"), bot()) == mk_neg(atom("p")));
    CHECK(meta("phi") != atom("phi"));
}

TEST_CASE("name validation") {
    CHECK_THROWS_AS(atom("0p"), SubstError);
    CHECK_THROWS_AS(atom(""), SubstError);
    CHECK_THROWS_AS(meta("bad name"), SubstError);
    CHECK(atom("p_1") != nullptr);
    CHECK(atom("Q2") != nullptr);
}

TEST_CASE("normalize unfolds box and is idempotent") {
    Fm p = atom("p");
    CHECK(normalize(mk_box(p)) == mk_strictif(top(), p));
    Fm nested = mk_imp(mk_box(mk_box(p)), bot());
    Fm norm = normalize(nested);
    CHECK(norm == mk_imp(mk_strictif(top(), mk_strictif(top(), p)), bot()));
    CHECK(normalize(norm) == norm);
    // identity on box-free trees
    Fm boxfree = mk_or(mk_and(p, bot()), mk_imp(p, top()));
    CHECK(normalize(boxfree) == boxfree);
}

TEST_CASE("substitute replaces metavariables simultaneously") {
    Fm tmpl = mk_imp(meta("phi"), mk_imp(meta("psi"), meta("phi")));
    Fm got = substitute(tmpl, {{"phi", atom("p")}, {"psi", mk_or(atom("q"), atom("r"))}});
    CHECK(got == mk_imp(atom("p"), mk_imp(mk_or(atom("q"), atom("r")), atom("p"))));

    // simultaneous, not sequential: ?phi := psi-the-atom must not be re-substituted
    Fm swap = mk_and(meta("phi"), meta("psi"));
    CHECK(substitute(swap, {{"phi", atom("b")}, {"psi", atom("a")}}) ==
          mk_and(atom("b"), atom("a")));

    CHECK_THROWS_AS(substitute(tmpl, {{"phi", atom("p")}}), SubstError);
    CHECK_THROWS_AS(substitute(tmpl, {{"phi", atom("p")}, {"psi", meta("chi")}}), SubstError);
}

TEST_CASE("atoms and metavars") {
    Fm f = mk_imp(mk_and(atom("p"), atom("q")), mk_box(atom("r")));
    CHECK(atoms(f) == std::set<std::string>{"p", "q", "r"});
    CHECK(metavars(f).empty());
    CHECK_FALSE(has_metavars(f));

    Fm tmpl = mk_strictif(meta("phi"), mk_or(meta("psi"), atom("p")));
    CHECK(metavars(tmpl) == std::set<std::string>{"phi", "psi"});
    CHECK(has_metavars(tmpl));
    CHECK(atoms(tmpl) == std::set<std::string>{"p"});
}

TEST_CASE("subformulas and node_count") {
    Fm p = atom("p"), q = atom("q");
    Fm f = mk_imp(mk_and(p, q), p);
    auto subs = subformulas(f);
    CHECK(subs.size() == 4);
    CHECK(subs.count(p) == 1);
    CHECK(subs.count(mk_and(p, q)) == 1);
    CHECK(subs.count(f) == 1);
    CHECK(node_count(p) == 1);
    CHECK(node_count(mk_and(p, q)) == 3);
    CHECK(node_count(normalize(mk_box(p))) == 3);
}

TEST_CASE("FmLess is a deterministic strict order") {
    FmLess less;
    Fm p = atom("p"), q = atom("q");
    CHECK_FALSE(less(p, p));
    // smaller node count first
    CHECK(less(p, mk_and(p, q)));
    CHECK_FALSE(less(mk_and(p, q), p));
    // ties broken by print string
    CHECK(less(p, q) != less(q, p));
    std::vector<Fm> sample = {mk_or(q, p), p, bot(), mk_and(p, q), top(), q};
    std::sort(sample.begin(), sample.end(), less);
    for (std::size_t i = 0; i + 1 < sample.size(); ++i) CHECK(less(sample[i], sample[i + 1]));
}

TEST_CASE("modal Sigma recognizer") {
    Fm p = atom("p");
    CHECK(is_modal_sigma(top()));
    CHECK(is_modal_sigma(bot()));
    CHECK(is_modal_sigma(mk_box(p)));
    CHECK(is_modal_sigma(normalize(mk_box(mk_and(p, p)))));
    CHECK(is_modal_sigma(mk_or(mk_box(p), mk_or(bot(), top()))));
    CHECK_FALSE(is_modal_sigma(p));
    CHECK_FALSE(is_modal_sigma(mk_and(top(), top())));
    CHECK_FALSE(is_modal_sigma(mk_or(p, mk_box(p))));
    // strict implication with non-Top antecedent is not a box
    CHECK_FALSE(is_modal_sigma(mk_strictif(p, p)));
}

TEST_CASE("chi translation") {
    Fm chi = mk_imp(atom("a"), atom("b"));
    Fm p = atom("p"), q = atom("q");
    Fm boxq = normalize(mk_box(q));

    // Sigma formulas pass through untouched
    CHECK(chi_translate(chi, top()) == top());
    CHECK(chi_translate(chi, bot()) == bot());
    CHECK(chi_translate(chi, boxq) == boxq);
    Fm sig_or = mk_or(boxq, top());
    CHECK(chi_translate(chi, sig_or) == sig_or);

    // conjunction distributes
    CHECK(chi_translate(chi, mk_and(p, boxq)) == mk_and(mk_imp(chi, p), boxq));

    // everything else gets chi ->
    CHECK(chi_translate(chi, p) == mk_imp(chi, p));
    CHECK(chi_translate(chi, mk_or(p, boxq)) == mk_imp(chi, mk_or(p, boxq)));
    CHECK(chi_translate(chi, mk_imp(p, q)) == mk_imp(chi, mk_imp(p, q)));
}
