#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lewiskit/proof.hpp"

namespace lewiskit {

struct BuilderError : std::logic_error {
    using std::logic_error::logic_error;
};

// Constructs checkable Hilbert proof objects. Reasoning under hypotheses is
// supported through hyp()/discharge(): a discharged block is compiled into
// axiom-level steps by the standard deduction-theorem translation (a1/a2 for
// the weakening and distribution cases), so the emitted object contains only
// ax/mp/nec steps. nec() is refused while any hypothesis is open — the
// necessitation rule applies to theorems only.
//
// Steps proved at the top level are deduplicated by conclusion, keeping the
// generated files compact. The builder validates every step the same way the
// checker will, so a finished proof is accepted by construction; tests still
// run check_proof over the written files, never trusting the builder.
class ProofBuilder {
public:
    struct Ref {
        int ctx = -1;
        int idx = -1;
        int gen = -1;
    };

    ProofBuilder(const Registry& reg, std::string logic);

    Ref ax(const std::string& scheme, const std::map<std::string, Fm>& binding);
    Ref mp(Ref a, Ref impl);  // from A and A -> B conclude B
    Ref nec(Ref impl);        // from the theorem A -> B conclude A ~> B

    Ref hyp(Fm f);            // opens a hypothesis block
    Ref discharge(Ref r);     // closes the innermost block, proving hyp -> concl(r)

    Fm concl(Ref r) const;
    bool in_block() const { return contexts_.size() > 1; }

    // Finishes at the top level; goal must already be proved. If the goal is
    // not the last step, it is re-derived so the object ends on it.
    Proof finish(Fm goal);

    // Intuitionistic conveniences over a1..a10 + MP.
    Ref identity(Fm f);                    // f -> f
    Ref imp_trans(Ref ab, Ref bc);         // A->B, B->C  =>  A->C
    Ref swap_args(Ref r);                  // A->(B->C)  =>  B->(A->C)
    Ref and_intro(Ref a, Ref b);
    Ref and_left(Ref ab);                  // A /\ B  =>  A
    Ref and_right(Ref ab);
    Ref or_intro_left(Ref a, Fm b);        // A  =>  A \/ B
    Ref or_intro_right(Fm a, Ref b);       // B  =>  A \/ B
    Ref or_elim_imp(Ref ac, Ref bc);       // A->C, B->C  =>  (A \/ B) -> C
    Ref mp_chain(Ref impl, std::initializer_list<Ref> args);

private:
    struct LocalStep {
        ProofStep::Kind kind = ProofStep::Kind::Ax;
        bool is_hyp = false;
        std::string scheme;
        std::map<std::string, Fm> binding;
        Ref a, b;
        Fm conclusion = nullptr;
    };
    struct Context {
        int gen = 0;
        Fm hypothesis = nullptr;  // null for the top level
        std::vector<LocalStep> steps;
        std::map<Fm, int> dedup;  // top level only
    };

    const LocalStep& step(Ref r) const;
    void check_ref(Ref r) const;
    Ref append(int ctx, LocalStep s, bool force_new = false);
    Ref ax_at(int ctx, const std::string& scheme, const std::map<std::string, Fm>& binding);
    Ref mp_at(int ctx, Ref a, Ref impl);
    Ref identity_at(int ctx, Fm f);
    Ref weaken(int ctx, Fm hypothesis, Ref outer);  // concl(outer) => hyp -> concl(outer)

    const Registry& reg_;
    const Logic* logic_;
    std::vector<Context> contexts_;
    int next_gen_ = 1;
};

}  // namespace lewiskit
