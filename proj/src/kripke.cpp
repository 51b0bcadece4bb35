#include "lewiskit/kripke.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <limits>

#include "lewiskit/print.hpp"

namespace lewiskit {

Mask Preframe::le_pred(int k) const {
    Mask m = 0;
    for (int l = 0; l < n; ++l)
        if (le[l] & bit(k)) m |= bit(l);
    return m;
}

Mask Preframe::modal_range() const {
    Mask m = 0;
    for (int k = 0; k < n; ++k) m |= lt[k];
    return m;
}

int Preframe::index_of(const std::string& token) const {
    for (int w = 0; w < n; ++w)
        if (names[w] == token) return w;
    bool digits = !token.empty();
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (digits) {
        int w = std::atoi(token.c_str());
        if (w >= 0 && w < n) return w;
    }
    throw ModelError("unknown world '" + token + "'");
}

Preframe build_preframe(int n, const std::vector<std::pair<int, int>>& order_pairs,
                        const std::vector<std::pair<int, int>>& modal_pairs,
                        std::vector<std::string> names) {
    if (n < 0 || n > kMaxWorlds)
        throw ModelError("world count out of range: " + std::to_string(n));
    Preframe p;
    p.n = n;
    p.le.assign(n, 0);
    p.lt.assign(n, 0);
    for (int k = 0; k < n; ++k) p.le[k] = bit(k);
    auto check = [n](int w) {
        if (w < 0 || w >= n) throw ModelError("world index out of range: " + std::to_string(w));
    };
    for (auto [a, b] : order_pairs) {
        check(a);
        check(b);
        p.le[a] |= bit(b);
    }
    // reflexive-transitive closure of the order generators
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < n; ++k) {
            Mask row = p.le[k];
            for (int l = 0; l < n; ++l)
                if (row & bit(l)) row |= p.le[l];
            if (row != p.le[k]) {
                p.le[k] = row;
                changed = true;
            }
        }
    }
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if (k != l && p.le_rel(k, l) && p.le_rel(l, k))
                throw ModelError("order generators contain a cycle through worlds " +
                                 std::to_string(k) + " and " + std::to_string(l));
    for (auto [a, b] : modal_pairs) {
        check(a);
        check(b);
        p.lt[a] |= bit(b);
    }
    if (names.empty())
        for (int w = 0; w < n; ++w) names.push_back(std::to_string(w));
    if (static_cast<int>(names.size()) != n)
        throw ModelError("expected " + std::to_string(n) + " world names");
    p.names = std::move(names);
    return p;
}

bool is_frame(const Preframe& p) {
    // k <= l <| m => k <| m, i.e. the lt-row of l is contained in that of k
    for (int k = 0; k < p.n; ++k)
        for (int l = 0; l < p.n; ++l)
            if (p.le_rel(k, l) && (p.lt[l] & ~p.lt[k])) return false;
    return true;
}

Frame::Frame(Preframe p) : pf_(std::move(p)) {
    if (!is_frame(pf_))
        throw ModelError("preframe violates the frame condition (<= ; <| not included in <|)");
}

Model::Model(Frame frame, std::map<std::string, Mask> valuation)
    : frame_(std::move(frame)), val_(std::move(valuation)) {
    Mask all = full_mask(frame_.n());
    for (const auto& [name, set] : val_) {
        if (set & ~all) throw ModelError("valuation of '" + name + "' mentions unknown worlds");
        for (int k = 0; k < frame_.n(); ++k)
            if ((set & bit(k)) && (frame_.pre().le[k] & ~set))
                throw ModelError("valuation of '" + name + "' is not upward closed at world " +
                                 frame_.pre().name_of(k));
    }
}

Mask Model::atom_mask(const std::string& name) const {
    auto it = val_.find(name);
    return it == val_.end() ? 0 : it->second;
}

Mask Evaluator::eval(Fm f) {
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
    const Preframe& p = m_.pre();
    Mask all = full_mask(p.n);
    Mask r = 0;
    switch (f->conn()) {
        case Conn::Bot:
            r = 0;
            break;
        case Conn::Top:
            r = all;
            break;
        case Conn::Atom:
            r = m_.atom_mask(f->name());
            break;
        case Conn::Meta:
            throw ModelError("cannot evaluate a template containing ?" + f->name());
        case Conn::Box:
            return eval(normalize(f));
        case Conn::And:
            r = eval(f->left()) & eval(f->right());
            break;
        case Conn::Or:
            r = eval(f->left()) | eval(f->right());
            break;
        case Conn::Imp: {
            Mask bad = eval(f->left()) & ~eval(f->right());
            for (int k = 0; k < p.n; ++k)
                if (!(p.le[k] & bad)) r |= bit(k);
            break;
        }
        case Conn::Strictif: {
            Mask bad = eval(f->left()) & ~eval(f->right());
            for (int k = 0; k < p.n; ++k)
                if (!(p.lt[k] & bad)) r |= bit(k);
            break;
        }
    }
    memo_.emplace(f, r);
    return r;
}

bool forces(const Model& m, int world, Fm f) {
    if (world < 0 || world >= m.n()) throw ModelError("world index out of range");
    return Evaluator(m).eval(f) & bit(world);
}

bool model_validates(const Model& m, Fm f) {
    return Evaluator(m).eval(f) == full_mask(m.n());
}

std::vector<Mask> upsets(const Preframe& p) {
    std::vector<Mask> out;
    Mask all = full_mask(p.n);
    for (Mask s = 0;; ++s) {
        bool up = true;
        for (int k = 0; k < p.n && up; ++k)
            if ((s & bit(k)) && (p.le[k] & ~s)) up = false;
        if (up) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

bool persistence_holds(const Preframe& p) {
    std::vector<Mask> ups = upsets(p);
    for (Mask u : ups)
        for (Mask v : ups) {
            Mask bad = u & ~v;
            Mask w = 0;
            for (int k = 0; k < p.n; ++k)
                if (!(p.lt[k] & bad)) w |= bit(k);
            for (int k = 0; k < p.n; ++k)
                if ((w & bit(k)) && (p.le[k] & ~w)) return false;
        }
    return true;
}

namespace {

// Postorder compilation of a normalized formula for the valuation sweep. Each
// node carries the least atom slot occurring below it (INT_MAX for constant
// subtrees): when the odometer bumps slot i it resets slots 0..i-1, so
// exactly the nodes with min_slot <= i need recomputation.
struct SweepNode {
    Conn conn;
    int a = -1, b = -1;
    int slot = -1;
    int min_slot = std::numeric_limits<int>::max();
};

struct SweepProgram {
    std::vector<std::string> vars;  // sorted
    std::vector<SweepNode> nodes;   // root last
};

SweepProgram compile_sweep(Fm f) {
    SweepProgram prog;
    for (const std::string& a : atoms(f)) prog.vars.push_back(a);
    std::map<Fm, int> seen;
    std::function<int(Fm)> go = [&](Fm g) -> int {
        if (auto it = seen.find(g); it != seen.end()) return it->second;
        SweepNode node;
        node.conn = g->conn();
        switch (g->conn()) {
            case Conn::Bot:
            case Conn::Top:
                break;
            case Conn::Atom: {
                auto pos = std::lower_bound(prog.vars.begin(), prog.vars.end(), g->name());
                node.slot = static_cast<int>(pos - prog.vars.begin());
                node.min_slot = node.slot;
                break;
            }
            case Conn::Meta:
                throw ModelError("cannot evaluate a formula with metavariable ?" + g->name());
            case Conn::Box:
                throw ModelError("unexpected unnormalized box");  // normalize() unfolds these
            default:
                node.a = go(g->left());
                node.b = go(g->right());
                node.min_slot = std::min(prog.nodes[node.a].min_slot,
                                         prog.nodes[node.b].min_slot);
                break;
        }
        int id = static_cast<int>(prog.nodes.size());
        prog.nodes.push_back(node);
        seen.emplace(g, id);
        return id;
    };
    go(f);
    return prog;
}

}  // namespace

std::optional<Refutation> find_refuting_valuation(const Frame& fr, Fm f, std::uint64_t cap) {
    f = normalize(f);
    SweepProgram prog = compile_sweep(f);
    const std::vector<std::string>& vars = prog.vars;
    std::vector<Mask> ups = upsets(fr.pre());
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        combos *= ups.size();
        if (combos > cap)
            throw CapExceeded("valuation search needs more than " + std::to_string(cap) +
                              " combinations; raise LEWISKIT_CAP");
    }
    const int n = fr.n();
    const Mask all = full_mask(n);
    const Preframe& pf = fr.pre();
    std::vector<std::size_t> pick(vars.size(), 0);
    std::vector<Mask> val(prog.nodes.size(), 0);
    auto recompute = [&](int from_slot) {
        for (std::size_t i = 0; i < prog.nodes.size(); ++i) {
            const SweepNode& nd = prog.nodes[i];
            if (nd.min_slot > from_slot) continue;
            switch (nd.conn) {
                case Conn::Bot:
                    val[i] = 0;
                    break;
                case Conn::Top:
                    val[i] = all;
                    break;
                case Conn::Atom:
                    val[i] = ups[pick[nd.slot]];
                    break;
                case Conn::And:
                    val[i] = val[nd.a] & val[nd.b];
                    break;
                case Conn::Or:
                    val[i] = val[nd.a] | val[nd.b];
                    break;
                case Conn::Imp: {
                    Mask fail = val[nd.a] & ~val[nd.b];
                    Mask res = 0;
                    for (int k = 0; k < n; ++k)
                        if (!(pf.le[k] & fail)) res |= bit(k);
                    val[i] = res;
                    break;
                }
                default: {  // Strictif
                    Mask fail = val[nd.a] & ~val[nd.b];
                    Mask res = 0;
                    for (int k = 0; k < n; ++k)
                        if (!(pf.lt[k] & fail)) res |= bit(k);
                    val[i] = res;
                    break;
                }
            }
        }
    };
    recompute(std::numeric_limits<int>::max());
    for (;;) {
        Mask forced = val.back();
        if (forced != all) {
            std::map<std::string, Mask> assignment;
            for (std::size_t i = 0; i < vars.size(); ++i) assignment[vars[i]] = ups[pick[i]];
            int world = 0;
            while (forced & bit(world)) ++world;
            return Refutation{std::move(assignment), world};
        }
        // odometer step over the upset choices; slot 0 moves fastest
        std::size_t i = 0;
        while (i < vars.size() && ++pick[i] == ups.size()) pick[i++] = 0;
        if (i == vars.size()) return std::nullopt;
        recompute(static_cast<int>(i));
    }
}

bool frame_validates(const Frame& fr, Fm f, std::uint64_t cap) {
    return !find_refuting_valuation(fr, f, cap).has_value();
}

bool frame_validates(const Frame& fr, Fm f) { return frame_validates(fr, f, enumeration_cap()); }

std::uint64_t enumeration_cap() {
    static std::uint64_t cap = [] {
        if (const char* env = std::getenv("LEWISKIT_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t(10'000'000);
    }();
    return cap;
}

}  // namespace lewiskit
