// Regenerates the derivation-replay fixtures under fixtures/proofs/. Each
// fixture is one named theorem of a registry logic, assembled with
// ProofBuilder and written in the plain proof-file format; the manifest lists
// file, host logic and goal per line. The outputs are committed — the test
// suite replays the frozen files and never runs this tool.
//
// Usage: genproofs [output-dir]   (default <fixtures>/proofs)

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lewiskit/parser.hpp"
#include "lewiskit/print.hpp"
#include "lewiskit/proof.hpp"
#include "lewiskit/proof_builder.hpp"
#include "lewiskit/registry.hpp"

using namespace lewiskit;

namespace {

using B = ProofBuilder;
using R = ProofBuilder::Ref;

Fm F(const std::string& s) { return parse_normalized(s); }
Fm boxed(Fm x) { return mk_strictif(top(), x); }

// ---- strict-implication glue ------------------------------------------

// A~>B, B~>C  =>  A~>C
R tr(B& b, R ab, R bc) {
    Fm x = b.concl(ab), y = b.concl(bc);
    return b.mp_chain(
        b.ax("Tr", {{"phi", x->left()}, {"psi", x->right()}, {"chi", y->right()}}), {ab, bc});
}

// A~>B, A~>C  =>  A~>(B/\C)
R pairing(B& b, R ab, R ac) {
    Fm x = b.concl(ab), y = b.concl(ac);
    return b.mp_chain(
        b.ax("Karr", {{"phi", x->left()}, {"psi", x->right()}, {"chi", y->right()}}), {ab, ac});
}

// ---- propositional lemma kit ------------------------------------------

// theorem A -> #t
R to_top(B& b, Fm a) { return b.mp(b.ax("a10", {}), b.ax("a1", {{"phi", top()}, {"psi", a}})); }

// from theorem X, the theorem #t -> X
R const_thm(B& b, R thm) {
    return b.mp(thm, b.ax("a1", {{"phi", b.concl(thm)}, {"psi", top()}}));
}

// theorem (A /\ (A->B)) -> B
R mp_pair(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_and(a, mk_imp(a, c)));
    return b.discharge(b.mp(b.and_left(h), b.and_right(h)));
}

// theorem ((A->B) /\ A) -> B
R mp_pair_swapped(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_and(mk_imp(a, c), a));
    return b.discharge(b.mp(b.and_right(h), b.and_left(h)));
}

// theorem (A /\ B) -> (B /\ A)
R and_comm(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_and(a, c));
    return b.discharge(b.and_intro(b.and_right(h), b.and_left(h)));
}

// theorem A -> (A /\ A)
R and_dup(B& b, Fm a) {
    R h = b.hyp(a);
    return b.discharge(b.and_intro(h, h));
}

// theorem (A \/ B) -> (B \/ A)
R or_comm(B& b, Fm a, Fm c) {
    return b.or_elim_imp(b.ax("a7", {{"phi", c}, {"psi", a}}),
                         b.ax("a6", {{"phi", c}, {"psi", a}}));
}

// theorem (A \/ A) -> A
R or_collapse(B& b, Fm a) {
    R i = b.identity(a);
    return b.or_elim_imp(i, i);
}

// theorem (A -> (A -> B)) -> (A -> B)
R contraction(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_imp(a, mk_imp(a, c)));
    R x = b.hyp(a);
    return b.discharge(b.discharge(b.mp(x, b.mp(x, h))));
}

// theorem ~A -> (A -> B)
R explosion_imp(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_neg(a));
    R x = b.hyp(a);
    return b.discharge(b.discharge(b.mp(b.mp(x, h), b.ax("a9", {{"phi", c}}))));
}

// theorem ((A->C) /\ (B->C)) -> ((A \/ B) -> C)
R or_pair(B& b, Fm a, Fm c, Fm d) {
    R h = b.hyp(mk_and(mk_imp(a, d), mk_imp(c, d)));
    return b.discharge(b.or_elim_imp(b.and_left(h), b.and_right(h)));
}

// theorem (X /\ ((X /\ Y) -> Z)) -> (Y -> Z)
R curry_pair(B& b, Fm x, Fm y, Fm z) {
    R h = b.hyp(mk_and(x, mk_imp(mk_and(x, y), z)));
    R yy = b.hyp(y);
    R s = b.mp(b.and_intro(b.and_left(h), yy), b.and_right(h));
    return b.discharge(b.discharge(s));
}

// ---- modal lemma kit (top level only: these use nec) ------------------

// theorem [](A->B) -> (A~>B); needs Tr and Karr
R bl_thm(B& b, Fm a, Fm c) {
    R a_top = b.nec(to_top(b, a));
    R a_id = b.nec(b.identity(a));
    R pair = b.nec(mp_pair(b, a, c));
    R h = b.hyp(boxed(mk_imp(a, c)));
    R t = tr(b, pairing(b, a_id, tr(b, a_top, h)), pair);
    return b.discharge(t);
}

// theorem (A~>B) -> ([]A -> []B); needs Tr only
R lb_thm(B& b, Fm a, Fm c) {
    R h = b.hyp(mk_strictif(a, c));
    R g = b.hyp(boxed(a));
    return b.discharge(b.discharge(tr(b, g, h)));
}

// from theorem A -> B, the theorem []A -> []B
R box_mono(B& b, R thm) {
    Fm f = b.concl(thm);
    R n = b.nec(thm);
    R h = b.hyp(boxed(f->left()));
    return b.discharge(tr(b, h, n));
}

// theorem (A~>C) -> (A -> []C) in hosts with Sbox
R collapse_fwd_thm(B& b, Fm p, Fm q) {
    R h = b.hyp(mk_strictif(p, q));
    R g = b.hyp(p);
    R t = tr(b, b.mp(g, b.ax("Sbox", {{"phi", p}})), h);
    return b.discharge(b.discharge(t));
}

// theorem (A -> []C) -> (A~>C) in hosts with Sbox and C4arr
R hug_thm(B& b, Fm p, Fm q) {
    Fm pbq = mk_imp(p, boxed(q));
    R bl = bl_thm(b, p, boxed(q));
    R h = b.hyp(pbq);
    R t = tr(b, b.mp(b.mp(h, b.ax("Sbox", {{"phi", pbq}})), bl),
             b.ax("C4arr", {{"phi", q}}));
    return b.discharge(t);
}

// theorem (A~>B) -> [](A->B) in hosts with Sbox and CBarr: case split on
// CBarr; the (A->B) branch boxes itself by Sbox, the A branch collapses the
// hypothesis to []B and weakens.
R box_from_cbarr_thm(B& b, Fm p, Fm q) {
    Fm pq = mk_imp(p, q);
    R n_a1 = b.nec(b.ax("a1", {{"phi", q}, {"psi", p}}));
    R sb = b.ax("Sbox", {{"phi", pq}});
    R h = b.hyp(mk_strictif(p, q));
    R split = b.mp(h, b.ax("CBarr", {{"phi", p}, {"psi", q}}));
    R g = b.hyp(p);
    R t = tr(b, tr(b, b.mp(g, b.ax("Sbox", {{"phi", p}})), h), n_a1);
    R via_p = b.discharge(t);
    return b.discharge(b.mp(split, b.or_elim_imp(sb, via_p)));
}

// ---- fixture table ----------------------------------------------------

struct FixtureDef {
    const char* file;
    const char* logic;
    const char* goal;
    std::function<void(B&)> derive;
};

std::vector<FixtureDef> fixtures() {
    Fm p = F("p"), q = F("q"), r = F("r");
    std::vector<FixtureDef> defs;
    auto add = [&](const char* file, const char* logic, const char* goal,
                   std::function<void(B&)> fn) {
        defs.push_back({file, logic, goal, std::move(fn)});
    };

    // -- K-variant equivalences ----------------------------------------

    add("kprime_from_karr.proof", "iA-", "(p ~> q) -> ((p /\\ r) ~> (q /\\ r))", [=](B& b) {
        R pr_p = b.nec(b.ax("a3", {{"phi", p}, {"psi", r}}));
        R pr_r = b.nec(b.ax("a4", {{"phi", p}, {"psi", r}}));
        R h = b.hyp(mk_strictif(p, q));
        b.discharge(pairing(b, tr(b, pr_p, h), pr_r));
    });

    add("karr_from_kprime.proof", "iA0+K'arr", "(p ~> q) -> ((p ~> r) -> (p ~> (q /\\ r)))",
        [=](B& b) {
            R n_dup = b.nec(and_dup(b, p));
            R comm_qp = b.nec(and_comm(b, q, p));
            R comm_rq = b.nec(and_comm(b, r, q));
            R h1 = b.hyp(mk_strictif(p, q));
            R h2 = b.hyp(mk_strictif(p, r));
            R u1 = b.mp(h1, b.ax("K'arr", {{"phi", p}, {"psi", q}, {"chi", p}}));
            R u3 = tr(b, tr(b, n_dup, u1), comm_qp);
            R u4 = b.mp(h2, b.ax("K'arr", {{"phi", p}, {"psi", r}, {"chi", q}}));
            R u6 = tr(b, tr(b, u3, u4), comm_rq);
            b.discharge(b.discharge(u6));
        });

    add("ktriple_from_karr.proof", "iA-", "(p ~> (q -> r)) -> ((p /\\ q) ~> r)", [=](B& b) {
        R n_a3 = b.nec(b.ax("a3", {{"phi", p}, {"psi", q}}));
        R n_a4 = b.nec(b.ax("a4", {{"phi", p}, {"psi", q}}));
        R pair = b.nec(mp_pair(b, q, r));
        R h = b.hyp(mk_strictif(p, mk_imp(q, r)));
        b.discharge(tr(b, pairing(b, n_a4, tr(b, n_a3, h)), pair));
    });

    add("kprime_from_ktriple.proof", "iA0+K'''arr", "(p ~> q) -> ((p /\\ r) ~> (q /\\ r))",
        [=](B& b) {
            R n_a5 = b.nec(b.ax("a5", {{"phi", q}, {"psi", r}}));
            R h = b.hyp(mk_strictif(p, q));
            R v2 = tr(b, h, n_a5);
            b.discharge(
                b.mp(v2, b.ax("K'''arr", {{"phi", p}, {"psi", r}, {"chi", mk_and(q, r)}})));
        });

    add("diprime_from_di.proof", "iA", "(p ~> q) -> ((p \\/ r) ~> (q \\/ r))", [=](B& b) {
        R n_a6 = b.nec(b.ax("a6", {{"phi", q}, {"psi", r}}));
        R n_a7 = b.nec(b.ax("a7", {{"phi", q}, {"psi", r}}));
        R h = b.hyp(mk_strictif(p, q));
        R t1 = tr(b, h, n_a6);
        b.discharge(b.mp_chain(
            b.ax("Di", {{"phi", p}, {"psi", r}, {"chi", mk_or(q, r)}}), {t1, n_a7}));
    });

    add("di_from_diprime.proof", "iA0+Di'", "(p ~> r) -> ((q ~> r) -> ((p \\/ q) ~> r))",
        [=](B& b) {
            R comm = b.nec(or_comm(b, r, q));
            R coll = b.nec(or_collapse(b, r));
            R h1 = b.hyp(mk_strictif(p, r));
            R h2 = b.hyp(mk_strictif(q, r));
            R w1 = b.mp(h1, b.ax("Di'", {{"phi", p}, {"psi", r}, {"chi", q}}));
            R w2 = b.mp(h2, b.ax("Di'", {{"phi", q}, {"psi", r}, {"chi", r}}));
            R w5 = tr(b, tr(b, tr(b, w1, comm), w2), coll);
            b.discharge(b.discharge(w5));
        });

    add("bl_derived.proof", "iA-", "[](p -> q) -> (p ~> q)",
        [=](B& b) { bl_thm(b, p, q); });

    add("lb_derived.proof", "iA0", "(p ~> q) -> ([]p -> []q)",
        [=](B& b) { lb_thm(b, p, q); });

    // -- box-axiom forms -----------------------------------------------

    add("boxprime_from_box.proof", "iBoxA-", "((r /\\ p) ~> q) -> (r ~> (p -> q))", [=](B& b) {
        R x_top = b.nec(to_top(b, r));
        R x_id = b.nec(b.identity(r));
        R glue = b.nec(curry_pair(b, r, p, q));
        R h = b.hyp(mk_strictif(mk_and(r, p), q));
        R t0 = b.mp(h, b.ax("Box", {{"phi", mk_and(r, p)}, {"psi", q}}));
        R t2 = pairing(b, x_id, tr(b, x_top, t0));
        b.discharge(tr(b, t2, glue));
    });

    add("boxdouble_from_boxprime.proof", "iA-+Box'", "(p ~> q) -> ((r -> p) ~> (r -> q))",
        [=](B& b) {
            R pre = b.nec(mp_pair_swapped(b, r, p));
            R h = b.hyp(mk_strictif(p, q));
            R x1 = tr(b, pre, h);
            b.discharge(
                b.mp(x1, b.ax("Box'", {{"chi", mk_imp(r, p)}, {"phi", r}, {"psi", q}})));
        });

    add("box_from_boxdouble.proof", "iA-+Box''", "(p ~> q) -> [](p -> q)", [=](B& b) {
        R n_pre = b.nec(const_thm(b, b.identity(p)));
        R h = b.hyp(mk_strictif(p, q));
        R y1 = b.mp(h, b.ax("Box''", {{"phi", p}, {"psi", q}, {"chi", p}}));
        b.discharge(tr(b, n_pre, y1));
    });

    add("di_from_box.proof", "iBoxA-", "(p ~> r) -> ((q ~> r) -> ((p \\/ q) ~> r))",
        [=](B& b) {
            R n_orp = b.nec(or_pair(b, p, q, r));
            R blr = bl_thm(b, mk_or(p, q), r);
            R h1 = b.hyp(mk_strictif(p, r));
            R h2 = b.hyp(mk_strictif(q, r));
            R c1 = b.mp(h1, b.ax("Box", {{"phi", p}, {"psi", r}}));
            R c2 = b.mp(h2, b.ax("Box", {{"phi", q}, {"psi", r}}));
            R c5 = b.mp(tr(b, pairing(b, c1, c2), n_orp), blr);
            b.discharge(b.discharge(c5));
        });

    // -- excluded middle and the box ------------------------------------

    add("em_split_of_strict.proof", "wk", "(p ~> q) -> ((p \\/ ~p) ~> (p -> q))",
        [=](B& b) {
            R n_a1 = b.nec(b.ax("a1", {{"phi", q}, {"psi", p}}));
            R exf = b.nec(explosion_imp(b, p, q));
            R h = b.hyp(mk_strictif(p, q));
            R t1 = tr(b, h, n_a1);
            b.discharge(b.mp_chain(
                b.ax("Di", {{"phi", p}, {"psi", mk_neg(p)}, {"chi", mk_imp(p, q)}}),
                {t1, exf}));
        });

    add("strict_from_em_split.proof", "wk", "((p \\/ ~p) ~> (p -> q)) -> (p ~> q)",
        [=](B& b) {
            R n_a6 = b.nec(b.ax("a6", {{"phi", p}, {"psi", mk_neg(p)}}));
            R n_id = b.nec(b.identity(p));
            R pair = b.nec(mp_pair(b, p, q));
            R h = b.hyp(mk_strictif(mk_or(p, mk_neg(p)), mk_imp(p, q)));
            R k2 = pairing(b, n_id, tr(b, n_a6, h));
            b.discharge(tr(b, k2, pair));
        });

    add("box_from_em.proof", "wk+em", "(p ~> q) -> [](p -> q)", [=](B& b) {
        R top_em = b.nec(const_thm(b, b.ax("em", {{"phi", p}})));
        R n_a1 = b.nec(b.ax("a1", {{"phi", q}, {"psi", p}}));
        R exf = b.nec(explosion_imp(b, p, q));
        R h = b.hyp(mk_strictif(p, q));
        R t1 = tr(b, h, n_a1);
        R t2 = b.mp_chain(
            b.ax("Di", {{"phi", p}, {"psi", mk_neg(p)}, {"chi", mk_imp(p, q)}}), {t1, exf});
        b.discharge(tr(b, top_em, t2));
    });

    // -- Loeb forms and transit -----------------------------------------

    add("fourarr_from_loeb_arrow.proof", "iGL-", "p ~> []p", [=](B& b) {
        Fm W = mk_and(p, boxed(p));
        R n_w_p = b.nec(b.ax("a3", {{"phi", p}, {"psi", boxed(p)}}));
        R hT = b.hyp(boxed(W));
        R T1 = b.discharge(tr(b, hT, n_w_p));  // []W -> []p
        R hp = b.hyp(p);
        R hb = b.hyp(boxed(W));
        R T2 = b.discharge(b.discharge(b.and_intro(hp, b.mp(hb, T1))));  // p -> ([]W -> W)
        R c3 = tr(b, b.nec(T2), b.ax("Larr", {{"phi", W}}));
        tr(b, c3, b.nec(b.ax("a4", {{"phi", p}, {"psi", boxed(p)}})));
    });

    add("loeb_box_from_loeb_arrow.proof", "iGL-", "[]([]p -> p) -> []p", [=](B& b) {
        R h = b.hyp(boxed(mk_imp(boxed(p), p)));
        b.discharge(tr(b, h, b.ax("Larr", {{"phi", p}})));
    });

    add("loeb_arrow_from_loeb_box_fourarr.proof", "iA-+Lbox+4arr", "([]p -> p) ~> p",
        [=](B& b) {
            Fm X = mk_imp(boxed(p), p);
            R z1 = b.ax("4arr", {{"phi", X}});
            R z2 = b.nec(b.ax("Lbox", {{"phi", p}}));
            R z5 = pairing(b, tr(b, z1, z2), b.nec(b.identity(X)));
            tr(b, z5, b.nec(mp_pair(b, boxed(p), p)));
        });

    add("fourbox_from_fourarr.proof", "iA+4arr", "[]p -> [][]p", [=](B& b) {
        R h = b.hyp(boxed(p));
        b.discharge(tr(b, h, b.ax("4arr", {{"phi", p}})));
    });

    add("lei_from_fourarr.proof", "iA+4arr", "[](p \\/ q) -> [](p \\/ []q)", [=](B& b) {
        R t1 = b.nec(b.ax("a6", {{"phi", p}, {"psi", boxed(q)}}));
        R t2 = tr(b, b.ax("4arr", {{"phi", q}}),
                  b.nec(b.ax("a7", {{"phi", p}, {"psi", boxed(q)}})));
        R t3 = b.mp_chain(
            b.ax("Di", {{"phi", p}, {"psi", q}, {"chi", mk_or(p, boxed(q))}}), {t1, t2});
        R h = b.hyp(boxed(mk_or(p, q)));
        b.discharge(tr(b, h, t3));
    });

    // -- strength axioms ------------------------------------------------

    add("sbox_from_sarr.proof", "iA0+Sarr", "p -> []p", [=](B& b) {
        b.imp_trans(b.ax("a1", {{"phi", p}, {"psi", top()}}),
                    b.ax("Sarr", {{"phi", top()}, {"psi", p}}));
    });

    add("sarr_from_sbox.proof", "iSA-", "(p -> q) -> (p ~> q)", [=](B& b) {
        R bl = bl_thm(b, p, q);
        R h = b.hyp(mk_imp(p, q));
        b.discharge(b.mp(b.mp(h, b.ax("Sbox", {{"phi", mk_imp(p, q)}})), bl));
    });

    add("sprime_from_sbox.proof", "iSA-", "(p ~> q) -> (p -> []q)",
        [=](B& b) { collapse_fwd_thm(b, p, q); });

    add("sbox_from_sprime.proof", "iA-+S'arr", "p -> []p", [=](B& b) {
        b.mp(b.nec(b.identity(p)), b.ax("S'arr", {{"phi", p}, {"psi", p}}));
    });

    add("strict_by_mp_only.proof", "iA0+Sarr", "(p /\\ q) ~> p", [=](B& b) {
        // deliberately nec-free: with Sarr the rule "from a proved implication
        // infer the strict form" needs modus ponens only
        b.mp(b.ax("a3", {{"phi", p}, {"psi", q}}),
             b.ax("Sarr", {{"phi", mk_and(p, q)}, {"psi", p}}));
    });

    add("fourarr_from_strength.proof", "iSA-", "p ~> []p",
        [=](B& b) { b.nec(b.ax("Sbox", {{"phi", p}})); });

    add("parr_from_strength.proof", "iSA-", "(p ~> q) -> [](p ~> q)",
        [=](B& b) { b.ax("Sbox", {{"phi", mk_strictif(p, q)}}); });

    add("loeb_arrow_from_strength_loeb_box.proof", "iSA-+Lbox", "([]p -> p) ~> p",
        [=](B& b) {
            Fm X = mk_imp(boxed(p), p);
            R z1 = b.nec(b.ax("Sbox", {{"phi", X}}));
            R z2 = b.nec(b.ax("Lbox", {{"phi", p}}));
            R z5 = pairing(b, tr(b, z1, z2), b.nec(b.identity(X)));
            tr(b, z5, b.nec(mp_pair(b, boxed(p), p)));
        });

    // -- W and M forms --------------------------------------------------

    add("wprime_from_warr.proof", "iGW-", "(p ~> q) -> (([]q -> p) ~> q)", [=](B& b) {
        R pre = b.nec(mp_pair_swapped(b, boxed(q), p));
        R h = b.hyp(mk_strictif(p, q));
        R t1 = tr(b, pre, h);
        b.discharge(b.mp(t1, b.ax("Warr", {{"phi", mk_imp(boxed(q), p)}, {"psi", q}})));
    });

    add("warr_from_wprime.proof", "iA-+W'arr", "((p /\\ []q) ~> q) -> (p ~> q)", [=](B& b) {
        Fm bq = boxed(q);
        R f = b.hyp(mk_imp(bq, p));
        R g = b.hyp(bq);
        R T_a = b.discharge(b.discharge(b.and_intro(b.mp(g, f), g)));
        R n1 = b.nec(T_a);
        R n2 = b.nec(b.ax("a1", {{"phi", p}, {"psi", bq}}));
        R h = b.hyp(mk_strictif(mk_and(p, bq), q));
        R s1 = b.mp(h, b.ax("W'arr", {{"phi", mk_and(p, bq)}, {"psi", q}}));
        b.discharge(tr(b, n2, tr(b, n1, s1)));
    });

    add("mprime_from_marr.proof", "iA-+Marr", "((p /\\ []r) ~> q) -> (p ~> ([]r -> q))",
        [=](B& b) {
            Fm br = boxed(r);
            R n_a5 = b.nec(b.ax("a5", {{"phi", p}, {"psi", br}}));
            R h = b.hyp(mk_strictif(mk_and(p, br), q));
            R g1 = b.mp(h, b.ax("Marr", {{"phi", mk_and(p, br)}, {"psi", q}, {"chi", r}}));
            b.discharge(tr(b, n_a5, g1));
        });

    add("marr_from_mprime.proof", "iA-+M'arr", "(p ~> q) -> (([]r -> p) ~> ([]r -> q))",
        [=](B& b) {
            Fm br = boxed(r);
            R pre = b.nec(mp_pair_swapped(b, br, p));
            R h = b.hyp(mk_strictif(p, q));
            R g1 = tr(b, pre, h);
            b.discharge(
                b.mp(g1, b.ax("M'arr", {{"phi", mk_imp(br, p)}, {"chi", r}, {"psi", q}})));
        });

    // -- deriving the W/Loeb package ------------------------------------

    add("loeb_arrow_from_warr.proof", "iGW-", "([]p -> p) ~> p", [=](B& b) {
        R t1 = b.nec(mp_pair_swapped(b, boxed(p), p));
        b.mp(t1, b.ax("Warr", {{"phi", mk_imp(boxed(p), p)}, {"psi", p}}));
    });

    add("warr_from_marr_loeb.proof", "iGL-+Marr", "((p /\\ []q) ~> q) -> (p ~> q)",
        [=](B& b) {
            Fm bq = boxed(q);
            R n_a5 = b.nec(b.ax("a5", {{"phi", p}, {"psi", bq}}));
            R h = b.hyp(mk_strictif(mk_and(p, bq), q));
            R g1 = b.mp(h, b.ax("Marr", {{"phi", mk_and(p, bq)}, {"psi", q}, {"chi", q}}));
            R g2 = tr(b, n_a5, g1);
            b.discharge(tr(b, g2, b.ax("Larr", {{"phi", q}})));
        });

    add("warr_from_parr_loeb.proof", "iGL-+Parr", "((p /\\ []q) ~> q) -> (p ~> q)",
        [=](B& b) {
            Fm bq = boxed(q);
            Fm Z = mk_and(p, bq);
            Fm bz = boxed(Z);
            Fm qz = mk_imp(bq, Z), zz = mk_imp(bz, Z);
            R T_lb = lb_thm(b, Z, q);
            R h1 = b.hyp(mk_imp(bz, bq));
            R h2 = b.hyp(qz);
            R h3 = b.hyp(bz);
            R T_imp = b.discharge(b.discharge(b.discharge(b.mp(b.mp(h3, h1), h2))));
            R nT_c = b.nec(b.imp_trans(T_lb, T_imp));
            R bl_i = bl_thm(b, qz, zz);
            R n_a5 = b.nec(b.ax("a5", {{"phi", p}, {"psi", bq}}));
            R H = b.hyp(mk_strictif(Z, q));
            R i1 = b.mp(H, b.ax("Parr", {{"phi", Z}, {"psi", q}}));
            R i3 = b.mp(tr(b, i1, nT_c), bl_i);
            R i5 = tr(b, tr(b, i3, b.ax("Larr", {{"phi", Z}})), H);
            b.discharge(tr(b, n_a5, i5));
        });

    add("box_of_boxed_strict.proof", "iA-+Marr", "([]p ~> q) -> []([]p -> q)", [=](B& b) {
        Fm bp = boxed(p);
        R n_top = b.nec(const_thm(b, b.identity(bp)));
        R h = b.hyp(mk_strictif(bp, q));
        R g1 = b.mp(h, b.ax("Marr", {{"phi", bp}, {"psi", q}, {"chi", p}}));
        b.discharge(tr(b, n_top, g1));
    });

    // -- characteristic-scheme case splits ------------------------------

    add("cbprime_from_cbbox.proof", "iK_box-+CBbox", "[](q -> p) -> ((q -> p) \\/ q)",
        [=](B& b) {
            Fm qp = mk_imp(q, p);
            R cb = b.ax("CBbox", {{"phi", qp}, {"psi", q}});
            R left = b.imp_trans(contraction(b, q, p), b.ax("a6", {{"phi", qp}, {"psi", q}}));
            R right = b.ax("a7", {{"phi", qp}, {"psi", q}});
            b.imp_trans(cb, b.or_elim_imp(left, right));
        });

    add("cbbox_from_cbprime.proof", "iK_box-+CB'box", "[]p -> ((q -> p) \\/ q)", [=](B& b) {
        R n_a1 = b.nec(b.ax("a1", {{"phi", p}, {"psi", q}}));
        R h = b.hyp(boxed(p));
        R t1 = tr(b, h, n_a1);
        b.discharge(b.mp(t1, b.ax("CB'box", {{"phi", p}, {"psi", q}})));
    });

    add("cbbox_from_cbarr.proof", "iA-+CBarr", "[]p -> ((q -> p) \\/ q)", [=](B& b) {
        R n_top = b.nec(to_top(b, q));
        R h = b.hyp(boxed(p));
        R t1 = tr(b, n_top, h);
        b.discharge(b.mp(t1, b.ax("CBarr", {{"phi", q}, {"psi", p}})));
    });

    add("box_from_cbarr_strength.proof", "mHC_arr-", "(p ~> q) -> [](p -> q)",
        [=](B& b) { box_from_cbarr_thm(b, p, q); });

    add("di_from_cbarr_strength.proof", "mHC_arr-",
        "(p ~> r) -> ((q ~> r) -> ((p \\/ q) ~> r))", [=](B& b) {
            R Tp = box_from_cbarr_thm(b, p, r);
            R Tq = box_from_cbarr_thm(b, q, r);
            R n_orp = b.nec(or_pair(b, p, q, r));
            R blr = bl_thm(b, mk_or(p, q), r);
            R h1 = b.hyp(mk_strictif(p, r));
            R h2 = b.hyp(mk_strictif(q, r));
            R c5 = b.mp(tr(b, pairing(b, b.mp(h1, Tp), b.mp(h2, Tq)), n_orp), blr);
            b.discharge(b.discharge(c5));
        });

    add("marr_from_cbarr_strength.proof", "mHC_arr",
        "(p ~> q) -> (([]r -> p) ~> ([]r -> q))", [=](B& b) {
            Fm br = boxed(r);
            Fm X = mk_imp(br, p), Y = mk_imp(br, q);
            R w1 = b.hyp(mk_imp(p, q));
            R w2 = b.hyp(X);
            R w3 = b.hyp(br);
            R T_imp = b.discharge(b.discharge(b.discharge(b.mp(b.mp(w3, w2), w1))));
            R bl_xy = bl_thm(b, X, Y);
            R z0 = b.hyp(mk_imp(p, q));
            R z1 = b.mp(b.mp(b.mp(z0, T_imp), b.ax("Sbox", {{"phi", mk_imp(X, Y)}})), bl_xy);
            R B1 = b.discharge(z1);
            R n_a1q = b.nec(b.ax("a1", {{"phi", q}, {"psi", br}}));
            R xtop = b.nec(to_top(b, X));
            R H = b.hyp(mk_strictif(p, q));
            R sp = b.mp(H, b.ax("CBarr", {{"phi", p}, {"psi", q}}));
            R g0 = b.hyp(p);
            R g1 = tr(b, tr(b, b.mp(g0, b.ax("Sbox", {{"phi", p}})), H), n_a1q);
            R B2 = b.discharge(tr(b, xtop, g1));
            b.discharge(b.mp(sp, b.or_elim_imp(B1, B2)));
        });

    add("warr_from_cbarr_loeb.proof", "KM_arr", "((p /\\ []q) ~> q) -> (p ~> q)",
        [=](B& b) {
            Fm bq = boxed(q);
            Fm G = mk_and(p, bq);
            Fm A = mk_imp(G, q);
            Fm X = mk_imp(bq, q);
            Fm pX = mk_imp(p, X);
            R u1 = b.hyp(A);
            R u2 = b.hyp(p);
            R u3 = b.hyp(bq);
            R T_curry =
                b.discharge(b.discharge(b.discharge(b.mp(b.and_intro(u2, u3), u1))));
            R n_pairX = b.nec(mp_pair_swapped(b, p, X));
            R v1 = b.hyp(boxed(pX));
            R v2 = b.hyp(boxed(p));
            R K1 = b.discharge(b.discharge(tr(b, pairing(b, v1, v2), n_pairX)));
            R bl_pq = bl_thm(b, p, q);
            R ptop = b.nec(to_top(b, p));
            R a0 = b.hyp(A);
            R t0 = b.mp(a0, T_curry);
            R t1 = b.mp(t0, b.ax("Sbox", {{"phi", pX}}));
            R f0 = b.hyp(p);
            R m2 = b.mp(b.mp(f0, b.ax("Sbox", {{"phi", p}})), b.mp(t1, K1));
            R m3 = b.mp(m2, b.ax("Lbox", {{"phi", q}}));
            R m5 = b.mp(m3, b.mp(f0, t0));
            R n1 = b.discharge(m5);
            R B1 = b.discharge(
                b.mp(b.mp(n1, b.ax("Sbox", {{"phi", mk_imp(p, q)}})), bl_pq));
            R c0 = b.hyp(G);
            R B2 = b.discharge(tr(b, ptop, b.and_right(c0)));
            R H = b.hyp(mk_strictif(G, q));
            R sp = b.mp(H, b.ax("CBarr", {{"phi", G}, {"psi", q}}));
            b.discharge(b.mp(sp, b.or_elim_imp(B1, B2)));
        });

    // -- collapse systems ----------------------------------------------

    add("c4box_from_c4arr.proof", "iA+C4arr", "[][]p -> []p", [=](B& b) {
        R h = b.hyp(boxed(boxed(p)));
        b.discharge(tr(b, h, b.ax("C4arr", {{"phi", p}})));
    });

    add("c4arr_from_apparr.proof", "iA-+Apparr", "[]p ~> p", [=](B& b) {
        R app = b.ax("Apparr", {{"phi", top()}, {"psi", p}});
        R h = b.hyp(boxed(p));
        R glue = b.discharge(b.and_intro(b.ax("a10", {}), h));
        tr(b, b.nec(glue), app);
    });

    add("c4arr_from_hug.proof", "iA-+Hug", "[]p ~> p", [=](B& b) {
        b.mp(b.identity(boxed(p)), b.ax("Hug", {{"phi", boxed(p)}, {"psi", p}}));
    });

    add("apparr_derived.proof", "PLAA-", "(p /\\ (p ~> q)) ~> q", [=](B& b) {
        R h = b.hyp(mk_and(p, mk_strictif(p, q)));
        R bq = tr(b, b.mp(b.and_left(h), b.ax("Sbox", {{"phi", p}})), b.and_right(h));
        R T = b.discharge(bq);
        tr(b, b.nec(T), b.ax("C4arr", {{"phi", q}}));
    });

    add("hug_derived.proof", "PLAA-", "(p -> []q) -> (p ~> q)",
        [=](B& b) { hug_thm(b, p, q); });

    add("strict_collapse_iff.proof", "PLAA-",
        "((p ~> q) -> (p -> []q)) /\\ ((p -> []q) -> (p ~> q))", [=](B& b) {
            R D1 = collapse_fwd_thm(b, p, q);
            R D2 = hug_thm(b, p, q);
            b.and_intro(D1, D2);
        });

    add("di_from_collapse.proof", "PLAA-", "(p ~> r) -> ((q ~> r) -> ((p \\/ q) ~> r))",
        [=](B& b) {
            R Tp = collapse_fwd_thm(b, p, r);
            R Tq = collapse_fwd_thm(b, q, r);
            R Th = hug_thm(b, mk_or(p, q), r);
            R h1 = b.hyp(mk_strictif(p, r));
            R h2 = b.hyp(mk_strictif(q, r));
            R e3 = b.or_elim_imp(b.mp(h1, Tp), b.mp(h2, Tq));
            b.discharge(b.discharge(b.mp(e3, Th)));
        });

    // -- linearity -------------------------------------------------------

    add("linarr_from_linbox.proof", "iA-+Linbox", "(p ~> q) \\/ (q ~> p)", [=](B& b) {
        R lin = b.ax("Linbox", {{"phi", p}, {"psi", q}});
        R bl1 = bl_thm(b, p, q);
        R bl2 = bl_thm(b, q, p);
        Fm aL = mk_strictif(p, q), aR = mk_strictif(q, p);
        R left = b.imp_trans(bl1, b.ax("a6", {{"phi", aL}, {"psi", aR}}));
        R right = b.imp_trans(bl2, b.ax("a7", {{"phi", aL}, {"psi", aR}}));
        b.mp(lin, b.or_elim_imp(left, right));
    });

    add("linbox_from_linarr_box.proof", "iBoxA+Linarr", "[](p -> q) \\/ [](q -> p)",
        [=](B& b) {
            R lin = b.ax("Linarr", {{"phi", p}, {"psi", q}});
            Fm bL = boxed(mk_imp(p, q)), bR = boxed(mk_imp(q, p));
            R left = b.imp_trans(b.ax("Box", {{"phi", p}, {"psi", q}}),
                                 b.ax("a6", {{"phi", bL}, {"psi", bR}}));
            R right = b.imp_trans(b.ax("Box", {{"phi", q}, {"psi", p}}),
                                  b.ax("a7", {{"phi", bL}, {"psi", bR}}));
            b.mp(lin, b.or_elim_imp(left, right));
        });

    // -- the admitted box-distribution bridge ---------------------------

    add("box_from_box_distribution.proof", "iA0+KMlinB", "(p ~> q) -> [](p -> q)",
        [=](B& b) {
            R h = b.hyp(mk_strictif(p, q));
            R g = b.hyp(boxed(p));
            R lb = b.discharge(tr(b, g, h));
            b.discharge(b.mp(lb, b.ax("KMlinB_assumed", {{"phi", p}, {"psi", q}})));
        });

    add("box_in_kmlin.proof", "KM.lin_box+KMlinB", "(p ~> q) -> [](p -> q)", [=](B& b) {
        R h = b.hyp(mk_strictif(p, q));
        R g = b.hyp(boxed(p));
        R lb = b.discharge(tr(b, g, h));
        b.discharge(b.mp(lb, b.ax("KMlinB_assumed", {{"phi", p}, {"psi", q}})));
    });

    // -- strict excluded-middle collapses -------------------------------

    add("em_strict_collapse_weak.proof", "iGW+CBbox",
        "((p ~> #f) /\\ (~p ~> #f)) -> []#f", [=](B& b) {
            Fm np = mk_neg(p);
            Fm bbot = boxed(bot());
            R cb = b.nec(b.ax("CBbox", {{"phi", bot()}, {"psi", p}}));
            R a4n = b.nec(b.ax("a4", {{"phi", top()}, {"psi", bbot}}));
            R h = b.hyp(mk_and(mk_strictif(p, bot()), mk_strictif(np, bot())));
            R d1 = b.mp_chain(b.ax("Di", {{"phi", np}, {"psi", p}, {"chi", bot()}}),
                              {b.and_right(h), b.and_left(h)});
            R d3 = tr(b, a4n, tr(b, cb, d1));
            b.discharge(b.mp(d3, b.ax("Warr", {{"phi", top()}, {"psi", bot()}})));
        });

    add("em_strict_collapse_loeb.proof", "iGL+CBbox",
        "(((p ~> #f) /\\ (~p ~> #f)) /\\ []((p ~> #f) /\\ (~p ~> #f))) -> []#f",
        [=](B& b) {
            Fm np = mk_neg(p);
            Fm h_fm = mk_and(mk_strictif(p, bot()), mk_strictif(np, bot()));
            Fm bbot = boxed(bot());
            R cbn = b.nec(b.ax("CBbox", {{"phi", bot()}, {"psi", p}}));
            R hh0 = b.hyp(h_fm);
            R d1 = b.mp_chain(b.ax("Di", {{"phi", np}, {"psi", p}, {"chi", bot()}}),
                              {b.and_right(hh0), b.and_left(hh0)});
            R d2 = tr(b, cbn, d1);  // []#f ~> #f
            R u = b.hyp(boxed(bbot));
            R T1 = b.discharge(b.discharge(tr(b, u, d2)));  // h -> ([][]#f -> []#f)
            R nT1 = b.nec(T1);
            R H = b.hyp(mk_and(h_fm, boxed(h_fm)));
            R m2 = tr(b, tr(b, b.and_right(H), nT1), b.ax("Larr", {{"phi", bbot}}));
            b.discharge(b.mp(m2, b.mp(b.and_left(H), T1)));
        });

    // -- the classical auxiliary chain ----------------------------------

    // shared scaffold: derive []([]p -> []~p) ~> []~p from the 2.21 scheme
    auto aux_chain = [=](B& b) -> R {
        Fm np = mk_neg(p);
        Fm bp = boxed(p), bnp = boxed(np), bbot = boxed(bot());
        Fm A = mk_imp(bp, bnp), A2 = mk_imp(bp, bbot);
        R n_contr = b.nec(mp_pair(b, p, bot()));  // (p /\ ~p) ~> #f
        R f1 = b.hyp(A);
        R f2 = b.hyp(bp);
        R g2 = tr(b, pairing(b, f2, b.mp(f2, f1)), n_contr);
        R T_a_a2 = b.discharge(b.discharge(g2));          // A -> A2
        R c1 = b.nec(box_mono(b, T_a_a2));                // []A ~> []A2
        R c2 = b.nec(bl_thm(b, bp, bbot));                // []A2 ~> ([]p ~> []#f)
        R c3 = b.ax("2.21", {{"psi", p}, {"phi", bot()}});
        R n_nf = b.nec(const_thm(b, b.identity(bot())));  // #t ~> ~#f
        R w = b.hyp(mk_strictif(mk_neg(bot()), np));
        R c4 = b.nec(b.discharge(tr(b, n_nf, w)));        // (~#f ~> ~p) ~> []~p
        return tr(b, tr(b, tr(b, c1, c2), c3), c4);
    };

    add("aux_box_collapse.proof", "iA+2.21+Auxp", "[]([]p -> []~p) ~> []~p",
        [=](B& b) { aux_chain(b); });

    add("boxed_fourarr_classical.proof", "iA+2.21+Auxp", "[](p ~> []p)", [=](B& b) {
        Fm np = mk_neg(p);
        Fm A = mk_imp(boxed(p), boxed(np));
        R aux2 = aux_chain(b);
        R e2 = b.nec(const_thm(b, aux2));
        R d_main = b.ax("2.21", {{"psi", A}, {"phi", np}});
        tr(b, tr(b, e2, d_main), b.ax("Auxp", {}));
    });

    // -- spec'd CLI example ---------------------------------------------

    add("tr_trivial.proof", "iA0", "(p ~> p) -> ((p ~> p) -> (p ~> p))",
        [=](B& b) { b.ax("Tr", {{"phi", p}, {"psi", p}, {"chi", p}}); });

    return defs;
}

}  // namespace

int main(int argc, char** argv) {
    namespace fs = std::filesystem;
    std::string out_dir =
        argc > 1 ? argv[1] : default_fixtures_dir() + "/proofs";
    fs::create_directories(out_dir);

    Registry reg = Registry::load_from_dir(default_data_dir());
    auto defs = fixtures();

    std::string manifest;
    manifest +=
        "# derivation-replay fixtures: file, host logic, goal (tab-separated)\n"
        "# regenerate with tools/genproofs; every file must check under its host\n"
        "# NOTE box_from_box_distribution and box_in_kmlin lean on the admitted\n"
        "# scheme KMlinB_assumed, which has no verified semantics here; their\n"
        "# hosts carry no semantic class, so no spot-check applies\n";

    int failures = 0;
    for (const auto& d : defs) {
        try {
            B b(reg, d.logic);
            d.derive(b);
            Proof pr = b.finish(F(d.goal));
            CheckResult chk = check_proof(reg, d.logic, pr);
            if (!chk.accepted)
                throw std::runtime_error("re-check failed at step " +
                                         std::to_string(chk.step) + ": " + chk.reason);
            std::ofstream out(out_dir + "/" + d.file);
            out << write_proof(pr);
            if (!out) throw std::runtime_error("write failed");
            manifest += std::string(d.file) + "\t" + d.logic + "\t" + d.goal + "\n";
            std::printf("ok   %-42s %-16s %4zu steps\n", d.file, d.logic, pr.steps.size());
        } catch (const std::exception& e) {
            std::printf("FAIL %-42s %s\n", d.file, e.what());
            ++failures;
        }
        std::fflush(stdout);
    }

    if (!failures) {
        std::ofstream mf(out_dir + "/manifest");
        mf << manifest;
    }

    // paranoid pass: re-read every written file and check it from scratch
    int reread_bad = 0;
    if (!failures) {
        for (const auto& d : defs) {
            Proof pr = read_proof_file(out_dir + "/" + d.file);
            CheckResult chk = check_proof(reg, pr.logic, pr);
            if (!chk.accepted || pr.goal != F(d.goal) || pr.logic != d.logic) {
                std::printf("REREAD-FAIL %s: %s\n", d.file, chk.reason.c_str());
                ++reread_bad;
            }
        }
    }

    std::printf("%zu fixtures, %d build failures, %d re-read failures\n", defs.size(),
                failures, reread_bad);
    return (failures || reread_bad) ? 1 : 0;
}
