#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lewiskit/kripke.hpp"
#include "lewiskit/parser.hpp"
#include "lewiskit/search.hpp"

using namespace lewiskit;

namespace {

Model chain2(Mask p_val) {
    // 0 <= 1, no modal arrows
    return Model(Frame(build_preframe(2, {{0, 1}}, {})), {{"p", p_val}});
}

}  // namespace

TEST_CASE("build_preframe closes the order") {
    Preframe p = build_preframe(3, {{0, 1}, {1, 2}}, {});
    CHECK(p.le_rel(0, 0));
    CHECK(p.le_rel(0, 2));  // transitive
    CHECK_FALSE(p.le_rel(2, 0));
    CHECK(p.le_pred(2) == (bit(0) | bit(1) | bit(2)));
    CHECK(p.modal_range() == 0);

    CHECK_THROWS_AS(build_preframe(2, {{0, 1}, {1, 0}}, {}), ModelError);  // cycle
    CHECK_THROWS_AS(build_preframe(2, {{0, 2}}, {}), ModelError);         // range
    CHECK_THROWS_AS(build_preframe(2, {}, {{2, 0}}), ModelError);
    CHECK_THROWS_AS(build_preframe(-1, {}, {}), ModelError);
    CHECK_THROWS_AS(build_preframe(32, {}, {}), ModelError);

    Preframe named = build_preframe(2, {}, {}, {"lo", "hi"});
    CHECK(named.index_of("hi") == 1);
    CHECK(named.index_of("0") == 0);  // numeric fallback
    CHECK_THROWS_AS(named.index_of("zz"), ModelError);
}

TEST_CASE("frame condition and constructors") {
    // 0 <= 1 and 1 <| 1 but not 0 <| 1: rejects the order/modal interaction
    Preframe bad = build_preframe(2, {{0, 1}}, {{1, 1}});
    CHECK_FALSE(is_frame(bad));
    CHECK_FALSE(persistence_holds(bad));
    CHECK_THROWS_AS(Frame{bad}, ModelError);

    Preframe good = build_preframe(2, {{0, 1}}, {{0, 1}, {1, 1}});
    CHECK(is_frame(good));
    CHECK(persistence_holds(good));
    Frame fr(good);

    // valuations must be upsets
    CHECK_THROWS_AS(Model(fr, {{"p", bit(0)}}), ModelError);
    Model ok(fr, {{"p", bit(1)}});
    CHECK(ok.atom_mask("p") == bit(1));
    CHECK(ok.atom_mask("unknown") == 0);
}

TEST_CASE("intuitionistic forcing on the two-chain") {
    Model m = chain2(bit(1));  // p only at the top
    Fm p = atom("p");
    CHECK_FALSE(forces(m, 0, p));
    CHECK(forces(m, 1, p));
    CHECK(forces(m, 0, top()));
    CHECK_FALSE(forces(m, 0, bot()));

    // -> quantifies over order successors
    CHECK_FALSE(forces(m, 0, parse_normalized("~p")));      // 1 above forces p
    CHECK_FALSE(forces(m, 0, parse_normalized("p \\/ ~p")));
    CHECK(forces(m, 0, parse_normalized("~~p")));
    CHECK(forces(m, 0, parse_normalized("~~p \\/ ~p")));
    CHECK_FALSE(model_validates(m, parse_normalized("p \\/ ~p")));
    CHECK(model_validates(m, parse_normalized("~~p \\/ ~p")));
    CHECK(model_validates(m, parse_normalized("p -> q -> p")));
}

TEST_CASE("strict implication quantifies over the modal relation") {
    // three-world modal chain 0 <| 1 <| 2 with 1 <= 2
    Preframe p = build_preframe(3, {{1, 2}}, {{0, 1}, {1, 2}});
    CHECK(is_frame(p));
    Model m(Frame(p), {});
    Fm boxbot = parse_normalized("[]#f");
    Fm claim = parse_normalized("[]#f ~> #f");

    CHECK(forces(m, 2, boxbot));        // no modal successors at the top
    CHECK_FALSE(forces(m, 1, boxbot));  // sees 2, which does not force #f
    CHECK_FALSE(forces(m, 0, boxbot));
    CHECK(forces(m, 0, claim));  // only successor 1 fails []#f, so vacuous
    CHECK_FALSE(forces(m, 1, claim));
    CHECK_FALSE(forces(m, 0, parse_normalized("([]#f ~> #f) -> []#f")));
}

TEST_CASE("forcing is persistent along the order") {
    Preframe p = build_preframe(4, {{0, 1}, {0, 2}, {2, 3}}, {{0, 2}, {0, 3}, {2, 3}});
    REQUIRE(is_frame(p));
    Frame fr(p);
    std::vector<Fm> pool;
    for (const char* s :
         {"p", "q", "~p", "p -> q", "p \\/ q", "p /\\ q", "p ~> q", "[]p", "[](p -> q)",
          "(p ~> q) -> [](p -> q)", "~~p", "[]p ~> q", "p ~> (q ~> p)"})
        pool.push_back(parse_normalized(s));
    auto ups = upsets(p);
    for (Mask pv : ups)
        for (Mask qv : ups) {
            Model m(fr, {{"p", pv}, {"q", qv}});
            Evaluator ev(m);
            for (Fm f : pool) {
                Mask mask = ev.eval(f);
                for (int k = 0; k < p.n; ++k)
                    for (int l = 0; l < p.n; ++l)
                        if (p.le_rel(k, l) && (mask & bit(k))) CHECK((mask & bit(l)) != 0);
            }
        }
}

TEST_CASE("upsets come out ascending") {
    CHECK(upsets(build_preframe(2, {{0, 1}}, {})) == std::vector<Mask>{0, 2, 3});
    CHECK(upsets(build_preframe(2, {}, {})) == std::vector<Mask>{0, 1, 2, 3});
    CHECK(upsets(build_preframe(3, {{0, 1}, {1, 2}}, {})) == std::vector<Mask>{0, 4, 6, 7});
    CHECK(upsets(build_preframe(0, {}, {})) == std::vector<Mask>{0});
}

TEST_CASE("refutation search over upset valuations") {
    Frame fr(build_preframe(2, {{0, 1}}, {}));
    auto ref = find_refuting_valuation(fr, parse_normalized("p \\/ ~p"), 1000);
    REQUIRE(ref.has_value());
    CHECK(ref->world == 0);
    CHECK(ref->valuation.at("p") == bit(1));
    CHECK_FALSE(frame_validates(fr, parse_normalized("p \\/ ~p"), 1000));
    CHECK(frame_validates(fr, parse_normalized("~~p \\/ ~p"), 1000));
    CHECK(frame_validates(fr, parse_normalized("p -> q -> p"), 1000));
    CHECK(frame_validates(fr, parse_normalized("#t"), 1000));

    CHECK_THROWS_AS(find_refuting_valuation(fr, parse_normalized("p \\/ q \\/ r"), 8),
                    CapExceeded);
}

TEST_CASE("evaluator rejects metavariables") {
    Model m = chain2(0);
    CHECK_THROWS_AS(forces(m, 0, meta("phi")), ModelError);
}

TEST_CASE("default enumeration cap") {
    CHECK(enumeration_cap() == 10'000'000);
}

TEST_CASE("incremental sweep agrees with a direct per-valuation evaluation") {
    // brute-force reference: first refuting (assignment, world) in the same
    // odometer order, evaluated through Model + Evaluator from scratch
    auto reference = [](const Frame& fr, Fm f) -> std::optional<Refutation> {
        f = normalize(f);
        std::set<std::string> var_set = atoms(f);
        std::vector<std::string> vars(var_set.begin(), var_set.end());
        std::vector<Mask> ups = upsets(fr.pre());
        std::vector<std::size_t> pick(vars.size(), 0);
        Mask all = full_mask(fr.n());
        for (;;) {
            std::map<std::string, Mask> val;
            for (std::size_t i = 0; i < vars.size(); ++i) val[vars[i]] = ups[pick[i]];
            Model m(fr, val);
            Mask forced = Evaluator(m).eval(f);
            if (forced != all) {
                int world = 0;
                while (forced & bit(world)) ++world;
                return Refutation{std::move(val), world};
            }
            std::size_t i = 0;
            while (i < vars.size() && ++pick[i] == ups.size()) pick[i++] = 0;
            if (i == vars.size()) return std::nullopt;
        }
    };

    std::vector<Fm> pool = {
        parse_normalized("p \\/ ~p"),
        parse_normalized("~~p -> p"),
        parse_normalized("(p ~> q) -> (p -> q)"),
        parse_normalized("[](p -> q) -> (p ~> q)"),
        parse_normalized("(p ~> q) \\/ (q ~> p)"),
        parse_normalized("([]#f ~> #f) -> []#f"),
        parse_normalized("((p /\\ q) ~> r) -> (p ~> (q -> r))"),
        parse_normalized("p -> []p"),
        parse_normalized("~~(p \\/ (p ~> #f))"),
    };
    int compared = 0;
    enumerate_frames(2, {}, [&](const Frame& fr) {
        for (Fm f : pool) {
            auto fast = find_refuting_valuation(fr, f, 1 << 20);
            auto slow = reference(fr, f);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                CHECK(fast->valuation == slow->valuation);
                CHECK(fast->world == slow->world);
            }
            ++compared;
        }
        return true;
    });
    CHECK(compared == 34 * 9);
}
