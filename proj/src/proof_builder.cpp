#include "lewiskit/proof_builder.hpp"

#include <functional>

#include "lewiskit/print.hpp"

namespace lewiskit {

ProofBuilder::ProofBuilder(const Registry& reg, std::string logic)
    : reg_(reg), logic_(&reg.logic(logic)) {
    contexts_.push_back(Context{0, nullptr, {}, {}});
}

const ProofBuilder::LocalStep& ProofBuilder::step(Ref r) const {
    check_ref(r);
    return contexts_[r.ctx].steps[r.idx];
}

void ProofBuilder::check_ref(Ref r) const {
    if (r.ctx < 0 || r.ctx >= static_cast<int>(contexts_.size()) ||
        contexts_[r.ctx].gen != r.gen || r.idx < 0 ||
        r.idx >= static_cast<int>(contexts_[r.ctx].steps.size()))
        throw BuilderError("reference into a discharged or foreign proof context");
}

Fm ProofBuilder::concl(Ref r) const { return step(r).conclusion; }

ProofBuilder::Ref ProofBuilder::append(int ctx, LocalStep s, bool force_new) {
    Context& c = contexts_[ctx];
    if (ctx == 0 && !s.is_hyp && !force_new) {
        auto it = c.dedup.find(s.conclusion);
        if (it != c.dedup.end()) return Ref{0, it->second, c.gen};
    }
    c.steps.push_back(std::move(s));
    int idx = static_cast<int>(c.steps.size()) - 1;
    if (ctx == 0) c.dedup.emplace(c.steps[idx].conclusion, idx);
    return Ref{ctx, idx, c.gen};
}

ProofBuilder::Ref ProofBuilder::ax_at(int ctx, const std::string& scheme,
                                      const std::map<std::string, Fm>& binding) {
    const Scheme& sch = reg_.scheme(scheme);
    if (!logic_->has_scheme(scheme))
        throw BuilderError("scheme '" + scheme + "' is not part of logic '" + logic_->name + "'");
    LocalStep s;
    s.kind = ProofStep::Kind::Ax;
    s.scheme = scheme;
    for (const auto& [name, value] : binding) s.binding[name] = normalize(value);
    s.conclusion = substitute(sch.tmpl, s.binding);
    return append(ctx, std::move(s));
}

ProofBuilder::Ref ProofBuilder::mp_at(int ctx, Ref a, Ref impl) {
    Fm ante = concl(a);
    Fm cond = concl(impl);
    if (cond->conn() != Conn::Imp || cond->left() != ante)
        throw BuilderError("mp: " + print(cond) + " does not start with " + print(ante));
    LocalStep s;
    s.kind = ProofStep::Kind::Mp;
    s.a = a;
    s.b = impl;
    s.conclusion = cond->right();
    return append(ctx, std::move(s));
}

ProofBuilder::Ref ProofBuilder::ax(const std::string& scheme,
                                   const std::map<std::string, Fm>& binding) {
    return ax_at(static_cast<int>(contexts_.size()) - 1, scheme, binding);
}

ProofBuilder::Ref ProofBuilder::mp(Ref a, Ref impl) {
    int cur = static_cast<int>(contexts_.size()) - 1;
    check_ref(a);
    check_ref(impl);
    return mp_at(cur, a, impl);
}

ProofBuilder::Ref ProofBuilder::nec(Ref impl) {
    if (in_block()) throw BuilderError("necessitation under an open hypothesis");
    if (!logic_->rule_nec)
        throw BuilderError("logic '" + logic_->name + "' has no necessitation rule");
    Fm prem = concl(impl);
    if (prem->conn() != Conn::Imp) throw BuilderError("necessitation needs an implication");
    LocalStep s;
    s.kind = ProofStep::Kind::Nec;
    s.a = impl;
    s.conclusion = mk_strictif(prem->left(), prem->right());
    return append(0, std::move(s));
}

ProofBuilder::Ref ProofBuilder::hyp(Fm f) {
    Context c;
    c.gen = next_gen_++;
    c.hypothesis = normalize(f);
    LocalStep s;
    s.is_hyp = true;
    s.conclusion = c.hypothesis;
    c.steps.push_back(std::move(s));
    contexts_.push_back(std::move(c));
    return Ref{static_cast<int>(contexts_.size()) - 1, 0, contexts_.back().gen};
}

ProofBuilder::Ref ProofBuilder::identity_at(int ctx, Fm f) {
    Fm ff = mk_imp(f, f);
    // ((f->(ff->f)) -> ((f->ff) -> (f->f))), then the two a1 premises
    Ref k1 = ax_at(ctx, "a2", {{"phi", f}, {"psi", ff}, {"chi", f}});
    Ref k2 = ax_at(ctx, "a1", {{"phi", f}, {"psi", ff}});
    Ref k3 = mp_at(ctx, k2, k1);
    Ref k4 = ax_at(ctx, "a1", {{"phi", f}, {"psi", f}});
    return mp_at(ctx, k4, k3);
}

ProofBuilder::Ref ProofBuilder::weaken(int ctx, Fm hypothesis, Ref outer) {
    Ref a1ref = ax_at(ctx, "a1", {{"phi", concl(outer)}, {"psi", hypothesis}});
    return mp_at(ctx, outer, a1ref);
}

ProofBuilder::Ref ProofBuilder::discharge(Ref r) {
    if (!in_block()) throw BuilderError("discharge without an open hypothesis");
    check_ref(r);
    const int c = static_cast<int>(contexts_.size()) - 1;
    const int parent = c - 1;
    Fm h = contexts_[c].hypothesis;

    // Compile "h |- x" into "|- h -> x" at the parent level, on demand.
    std::vector<Ref> memo(contexts_[c].steps.size(), Ref{});
    std::vector<bool> done(contexts_[c].steps.size(), false);
    std::function<Ref(Ref)> comp = [&](Ref x) -> Ref {
        if (x.ctx < c) return weaken(parent, h, x);
        if (done[x.idx]) return memo[x.idx];
        // copy: the steps vector may grow through recursive emission? It does
        // not — emission targets the parent context — but stay defensive.
        LocalStep s = contexts_[c].steps[x.idx];
        Ref out;
        if (s.is_hyp) {
            out = identity_at(parent, h);
        } else if (s.kind == ProofStep::Kind::Ax) {
            Ref base = ax_at(parent, s.scheme, s.binding);
            out = weaken(parent, h, base);
        } else {  // Mp
            Fm b_concl = concl(s.b);
            Fm ante = b_concl->left(), succ = b_concl->right();
            Ref ca = comp(s.a);
            Ref cb = comp(s.b);
            Ref k = ax_at(parent, "a2", {{"phi", h}, {"psi", ante}, {"chi", succ}});
            Ref t = mp_at(parent, cb, k);
            out = mp_at(parent, ca, t);
        }
        done[x.idx] = true;
        memo[x.idx] = out;
        return out;
    };
    Ref result = comp(r);
    contexts_.pop_back();
    return result;
}

Proof ProofBuilder::finish(Fm goal) {
    if (in_block()) throw BuilderError("finish with open hypotheses");
    goal = normalize(goal);
    Context& c = contexts_[0];
    auto it = c.dedup.find(goal);
    if (it == c.dedup.end())
        throw BuilderError("goal " + print(goal) + " has not been derived");
    if (it->second != static_cast<int>(c.steps.size()) - 1) {
        // land the object on its goal: goal -> goal, then a forced mp
        Ref g{0, it->second, c.gen};
        Ref id = identity_at(0, goal);
        LocalStep s;
        s.kind = ProofStep::Kind::Mp;
        s.a = g;
        s.b = id;
        s.conclusion = goal;
        append(0, std::move(s), true);
    }
    Proof proof;
    proof.goal = goal;
    proof.logic = logic_->name;
    for (const LocalStep& s : c.steps) {
        ProofStep ps;
        ps.kind = s.kind;
        ps.scheme = s.scheme;
        ps.binding = s.binding;
        if (s.kind == ProofStep::Kind::Mp) {
            ps.i = s.a.idx + 1;
            ps.j = s.b.idx + 1;
        } else if (s.kind == ProofStep::Kind::Nec) {
            ps.i = s.a.idx + 1;
        }
        ps.conclusion = s.conclusion;
        proof.steps.push_back(std::move(ps));
    }
    return proof;
}

ProofBuilder::Ref ProofBuilder::identity(Fm f) {
    return identity_at(static_cast<int>(contexts_.size()) - 1, normalize(f));
}

ProofBuilder::Ref ProofBuilder::imp_trans(Ref ab, Ref bc) {
    Fm a = concl(ab)->left();
    Ref h = hyp(a);
    Ref b = mp(h, ab);
    Ref cc = mp(b, bc);
    return discharge(cc);
}

ProofBuilder::Ref ProofBuilder::swap_args(Ref r) {
    Fm f = concl(r);
    if (f->conn() != Conn::Imp || f->right()->conn() != Conn::Imp)
        throw BuilderError("swap_args needs A -> (B -> C)");
    Fm a = f->left(), b = f->right()->left();
    Ref hb = hyp(b);
    Ref ha = hyp(a);
    Ref bc = mp(ha, r);
    Ref cc = mp(hb, bc);
    return discharge(discharge(cc));
}

ProofBuilder::Ref ProofBuilder::and_intro(Ref a, Ref b) {
    Ref k = ax("a5", {{"phi", concl(a)}, {"psi", concl(b)}});
    return mp(b, mp(a, k));
}

ProofBuilder::Ref ProofBuilder::and_left(Ref ab) {
    Fm f = concl(ab);
    if (f->conn() != Conn::And) throw BuilderError("and_left needs a conjunction");
    return mp(ab, ax("a3", {{"phi", f->left()}, {"psi", f->right()}}));
}

ProofBuilder::Ref ProofBuilder::and_right(Ref ab) {
    Fm f = concl(ab);
    if (f->conn() != Conn::And) throw BuilderError("and_right needs a conjunction");
    return mp(ab, ax("a4", {{"phi", f->left()}, {"psi", f->right()}}));
}

ProofBuilder::Ref ProofBuilder::or_intro_left(Ref a, Fm b) {
    return mp(a, ax("a6", {{"phi", concl(a)}, {"psi", normalize(b)}}));
}

ProofBuilder::Ref ProofBuilder::or_intro_right(Fm a, Ref b) {
    return mp(b, ax("a7", {{"phi", normalize(a)}, {"psi", concl(b)}}));
}

ProofBuilder::Ref ProofBuilder::or_elim_imp(Ref ac, Ref bc) {
    Fm f = concl(ac), g = concl(bc);
    if (f->conn() != Conn::Imp || g->conn() != Conn::Imp || f->right() != g->right())
        throw BuilderError("or_elim_imp needs A -> C and B -> C");
    Ref k = ax("a8", {{"phi", f->left()}, {"psi", g->left()}, {"chi", f->right()}});
    return mp(bc, mp(ac, k));
}

ProofBuilder::Ref ProofBuilder::mp_chain(Ref impl, std::initializer_list<Ref> args) {
    Ref cur = impl;
    for (Ref a : args) cur = mp(a, cur);
    return cur;
}

}  // namespace lewiskit
