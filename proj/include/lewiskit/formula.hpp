#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lewiskit {

// Connectives of the language. Box and Meta never survive normalization:
// Box(x) unfolds to Strictif(Top, x), and metavariables may occur only in
// scheme templates, never in object formulas.
enum class Conn : std::uint8_t { Bot, Top, Atom, Meta, And, Or, Imp, Strictif, Box };

class Formula;

// Formulas are interned: equal trees are the same object, so pointer
// equality is structural equality and nodes can key hash tables directly.
using Fm = const Formula*;

class Formula {
public:
    Conn conn() const { return conn_; }
    const std::string& name() const { return name_; }  // Atom / Meta only
    Fm left() const { return left_; }                  // binary left, or Box child
    Fm right() const { return right_; }

    bool is_binary() const {
        return conn_ == Conn::And || conn_ == Conn::Or || conn_ == Conn::Imp ||
               conn_ == Conn::Strictif;
    }
    bool is_leaf() const {
        return conn_ == Conn::Bot || conn_ == Conn::Top || conn_ == Conn::Atom ||
               conn_ == Conn::Meta;
    }

    Formula(const Formula&) = delete;
    Formula& operator=(const Formula&) = delete;

private:
    friend class Interner;
    Formula(Conn c, std::string n, Fm l, Fm r)
        : conn_(c), name_(std::move(n)), left_(l), right_(r) {}

    Conn conn_;
    std::string name_;
    Fm left_ = nullptr;
    Fm right_ = nullptr;
};

// Interning constructors. Atom/meta names must match [a-zA-Z][a-zA-Z0-9_]*.
Fm bot();
Fm top();
Fm atom(std::string_view name);
Fm meta(std::string_view name);
Fm mk_and(Fm l, Fm r);
Fm mk_or(Fm l, Fm r);
Fm mk_imp(Fm l, Fm r);
Fm mk_strictif(Fm l, Fm r);
Fm mk_box(Fm child);
Fm mk_neg(Fm f);  // sugar for Imp(f, Bot); there is no negation node

// Unfolds every Box into Strictif(Top, ·). Idempotent; identity on Box-free
// trees. Object-level code works on normalized formulas throughout.
Fm normalize(Fm f);

struct SubstError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simultaneous replacement of metavariables. Every metavariable occurring in
// the template must be bound and every binding value must be metavariable-free.
Fm substitute(Fm tmpl, const std::map<std::string, Fm>& binding);

std::set<std::string> atoms(Fm f);
std::set<std::string> metavars(Fm f);
bool has_metavars(Fm f);

// Structural order on formulas (node count, then print string). Used wherever
// a run-to-run deterministic order is needed; interned pointers are not stable
// across runs.
struct FmLess {
    bool operator()(Fm a, Fm b) const;
};

std::set<Fm, FmLess> subformulas(Fm f);
int node_count(Fm f);

// The modal Sigma grammar: sigma ::= #t | #f | []phi | sigma \/ sigma.
// Input is normalized first, so a literal Box node also qualifies.
bool is_modal_sigma(Fm f);

// The (chi)(.) translation: identity on modal Sigma formulas, distributes
// over conjunction, and prefixes "chi ->" in every other case.
Fm chi_translate(Fm chi, Fm f);

}  // namespace lewiskit
