#include "lewiskit/formula.hpp"

#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "lewiskit/print.hpp"

namespace lewiskit {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

struct Key {
    Conn conn;
    std::string name;
    Fm left;
    Fm right;
    bool operator==(const Key& o) const {
        return conn == o.conn && name == o.name && left == o.left && right == o.right;
    }
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        size_t h = std::hash<int>()(static_cast<int>(k.conn));
        h = h * 1000003u + std::hash<std::string>()(k.name);
        h = h * 1000003u + std::hash<const void*>()(k.left);
        h = h * 1000003u + std::hash<const void*>()(k.right);
        return h;
    }
};

}  // namespace

// Process-wide intern table. Nodes live forever; the workbench only ever
// builds desk-scale formulas, so reclamation is not worth the bookkeeping.
class Interner {
public:
    static Interner& instance() {
        static Interner i;
        return i;
    }

    Fm get(Conn c, std::string name, Fm l, Fm r) {
        Key k{c, name, l, r};
        std::lock_guard<std::mutex> lock(mu_);
        auto it = table_.find(k);
        if (it != table_.end()) return it->second;
        auto node = std::unique_ptr<Formula>(new Formula(c, std::move(name), l, r));
        Fm p = node.get();
        table_.emplace(std::move(k), p);
        storage_.push_back(std::move(node));
        return p;
    }

private:
    std::mutex mu_;
    std::unordered_map<Key, Fm, KeyHash> table_;
    std::vector<std::unique_ptr<Formula>> storage_;
};

Fm bot() { return Interner::instance().get(Conn::Bot, "", nullptr, nullptr); }
Fm top() { return Interner::instance().get(Conn::Top, "", nullptr, nullptr); }

Fm atom(std::string_view name) {
    if (!valid_name(name)) throw SubstError("invalid atom name: '" + std::string(name) + "'");
    return Interner::instance().get(Conn::Atom, std::string(name), nullptr, nullptr);
}

Fm meta(std::string_view name) {
    if (!valid_name(name))
        throw SubstError("invalid metavariable name: '" + std::string(name) + "'");
    return Interner::instance().get(Conn::Meta, std::string(name), nullptr, nullptr);
}

Fm mk_and(Fm l, Fm r) { return Interner::instance().get(Conn::And, "", l, r); }
Fm mk_or(Fm l, Fm r) { return Interner::instance().get(Conn::Or, "", l, r); }
Fm mk_imp(Fm l, Fm r) { return Interner::instance().get(Conn::Imp, "", l, r); }
Fm mk_strictif(Fm l, Fm r) { return Interner::instance().get(Conn::Strictif, "", l, r); }
Fm mk_box(Fm child) { return Interner::instance().get(Conn::Box, "", child, nullptr); }
Fm mk_neg(Fm f) { return mk_imp(f, bot()); }

Fm normalize(Fm f) {
    switch (f->conn()) {
        case Conn::Bot:
        case Conn::Top:
        case Conn::Atom:
        case Conn::Meta:
            return f;
        case Conn::Box:
            return mk_strictif(top(), normalize(f->left()));
        default: {
            Fm l = normalize(f->left());
            Fm r = normalize(f->right());
            if (l == f->left() && r == f->right()) return f;
            return Interner::instance().get(f->conn(), "", l, r);
        }
    }
}

Fm substitute(Fm tmpl, const std::map<std::string, Fm>& binding) {
    for (const auto& [name, value] : binding)
        if (has_metavars(value))
            throw SubstError("binding for ?" + name + " contains metavariables");
    std::function<Fm(Fm)> go = [&](Fm f) -> Fm {
        switch (f->conn()) {
            case Conn::Meta: {
                auto it = binding.find(f->name());
                if (it == binding.end())
                    throw SubstError("unbound metavariable ?" + f->name());
                return it->second;
            }
            case Conn::Bot:
            case Conn::Top:
            case Conn::Atom:
                return f;
            case Conn::Box:
                return mk_box(go(f->left()));
            default:
                return Interner::instance().get(f->conn(), "", go(f->left()), go(f->right()));
        }
    };
    return go(tmpl);
}

namespace {
template <typename Pred>
void collect_names(Fm f, Pred want, std::set<std::string>& out) {
    if (f->is_leaf()) {
        if (want(f->conn())) out.insert(f->name());
        return;
    }
    collect_names(f->left(), want, out);
    if (f->right()) collect_names(f->right(), want, out);
}
}  // namespace

std::set<std::string> atoms(Fm f) {
    std::set<std::string> out;
    collect_names(f, [](Conn c) { return c == Conn::Atom; }, out);
    return out;
}

std::set<std::string> metavars(Fm f) {
    std::set<std::string> out;
    collect_names(f, [](Conn c) { return c == Conn::Meta; }, out);
    return out;
}

bool has_metavars(Fm f) {
    if (f->conn() == Conn::Meta) return true;
    if (f->is_leaf()) return false;
    return has_metavars(f->left()) || (f->right() && has_metavars(f->right()));
}

int node_count(Fm f) {
    if (f->is_leaf()) return 1;
    int n = 1 + node_count(f->left());
    if (f->right()) n += node_count(f->right());
    return n;
}

bool FmLess::operator()(Fm a, Fm b) const {
    if (a == b) return false;
    int na = node_count(a), nb = node_count(b);
    if (na != nb) return na < nb;
    return print(a) < print(b);
}

std::set<Fm, FmLess> subformulas(Fm f) {
    std::set<Fm, FmLess> out;
    std::function<void(Fm)> go = [&](Fm g) {
        out.insert(g);
        if (g->is_leaf()) return;
        go(g->left());
        if (g->right()) go(g->right());
    };
    go(f);
    return out;
}

bool is_modal_sigma(Fm f) {
    f = normalize(f);
    std::function<bool(Fm)> sigma = [&](Fm g) -> bool {
        switch (g->conn()) {
            case Conn::Top:
            case Conn::Bot:
                return true;
            case Conn::Strictif:
                return g->left() == top();
            case Conn::Or:
                return sigma(g->left()) && sigma(g->right());
            default:
                return false;
        }
    };
    return sigma(f);
}

Fm chi_translate(Fm chi, Fm f) {
    f = normalize(f);
    if (is_modal_sigma(f)) return f;
    if (f->conn() == Conn::And)
        return mk_and(chi_translate(chi, f->left()), chi_translate(chi, f->right()));
    return mk_imp(normalize(chi), f);
}

}  // namespace lewiskit
