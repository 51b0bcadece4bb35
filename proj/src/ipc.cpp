#include "lewiskit/ipc.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "lewiskit/print.hpp"

namespace lewiskit {

namespace {

void require_propositional(Fm f) {
    switch (f->conn()) {
        case Conn::Strictif:
        case Conn::Box:
            throw IpcError("modal connective in an intuitionistic query: " + print(f));
        case Conn::Meta:
            throw IpcError("metavariable ?" + f->name() + " in an intuitionistic query");
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            require_propositional(f->left());
            require_propositional(f->right());
            return;
        default:
            return;
    }
}

bool contains(const std::vector<Fm>& v, Fm f) {
    return std::find(v.begin(), v.end(), f) != v.end();
}

struct SeqKey {
    std::vector<Fm> gamma;  // sorted, duplicate-free
    Fm goal = nullptr;
    bool operator==(const SeqKey& o) const { return goal == o.goal && gamma == o.gamma; }
};

struct SeqKeyHash {
    std::size_t operator()(const SeqKey& k) const {
        std::size_t h = std::hash<const void*>()(k.goal);
        for (Fm f : k.gamma) h = h * 1000003u ^ std::hash<const void*>()(f);
        return h;
    }
};

// The memo makes repeated queries (equivalence-class saturation, corpus
// sweeps) cheap; it is cleared wholesale if it ever balloons.
constexpr std::size_t kMemoCap = std::size_t(1) << 22;
thread_local std::unordered_map<SeqKey, bool, SeqKeyHash> g_memo;

// Backward search. Invertible steps run to saturation in place; the sequent
// is only memoized at the surviving choice points. Every rewrite strictly
// shrinks the usual weight multiset, so the search terminates.
bool prove_seq(std::vector<Fm> gamma, Fm goal) {
restart:
    if (goal->conn() == Conn::Top) return true;
    for (Fm g : gamma)
        if (g->conn() == Conn::Bot) return true;
    if (contains(gamma, goal)) return true;
    if (goal->conn() == Conn::And)
        return prove_seq(gamma, goal->left()) && prove_seq(std::move(gamma), goal->right());
    if (goal->conn() == Conn::Imp) {
        if (!contains(gamma, goal->left())) gamma.push_back(goal->left());
        goal = goal->right();
        goto restart;
    }
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        Fm g = gamma[i];
        switch (g->conn()) {
            case Conn::Top:
                gamma.erase(gamma.begin() + i);
                goto restart;
            case Conn::And: {
                Fm l = g->left(), r = g->right();
                gamma.erase(gamma.begin() + i);
                if (!contains(gamma, l)) gamma.push_back(l);
                if (!contains(gamma, r)) gamma.push_back(r);
                goto restart;
            }
            case Conn::Or: {
                std::vector<Fm> other = gamma;
                other[i] = g->right();
                gamma[i] = g->left();
                return prove_seq(std::move(gamma), goal) && prove_seq(std::move(other), goal);
            }
            case Conn::Imp: {
                Fm a = g->left(), b = g->right();
                switch (a->conn()) {
                    case Conn::Bot:
                        gamma.erase(gamma.begin() + i);
                        goto restart;
                    case Conn::Top:
                        gamma[i] = b;
                        goto restart;
                    case Conn::And:
                        gamma[i] = mk_imp(a->left(), mk_imp(a->right(), b));
                        goto restart;
                    case Conn::Or:
                        gamma[i] = mk_imp(a->left(), b);
                        if (!contains(gamma, mk_imp(a->right(), b)))
                            gamma.push_back(mk_imp(a->right(), b));
                        goto restart;
                    case Conn::Atom:
                        if (contains(gamma, a)) {
                            gamma[i] = b;
                            goto restart;
                        }
                        break;  // waits for its atom
                    default:
                        break;  // nested implication: a choice point below
                }
                break;
            }
            default:
                break;
        }
    }

    SeqKey key;
    key.gamma = gamma;
    std::sort(key.gamma.begin(), key.gamma.end(), std::less<Fm>());
    key.gamma.erase(std::unique(key.gamma.begin(), key.gamma.end()), key.gamma.end());
    key.goal = goal;
    if (auto it = g_memo.find(key); it != g_memo.end()) return it->second;

    bool result = false;
    if (goal->conn() == Conn::Or)
        result = prove_seq(gamma, goal->left()) || prove_seq(gamma, goal->right());
    if (!result) {
        for (std::size_t i = 0; i < gamma.size() && !result; ++i) {
            Fm g = gamma[i];
            if (g->conn() != Conn::Imp || g->left()->conn() != Conn::Imp) continue;
            Fm d = g->left()->right(), b = g->right();
            std::vector<Fm> rest = gamma;
            rest.erase(rest.begin() + i);
            std::vector<Fm> p1 = rest;
            if (!contains(p1, mk_imp(d, b))) p1.push_back(mk_imp(d, b));
            if (!prove_seq(std::move(p1), g->left())) continue;
            if (!contains(rest, b)) rest.push_back(b);
            result = prove_seq(std::move(rest), goal);
        }
    }
    if (g_memo.size() > kMemoCap) g_memo.clear();
    g_memo.emplace(std::move(key), result);
    return result;
}

// ---------------------------------------------------------------------------
// Rooted posets up to isomorphism, with upset-algebra operation tables.

struct IsoPoset {
    int n = 0;
    std::vector<Mask> le;  // upward closures, including the element itself
};

// Canonical form: minimum packed relation matrix over all relabelings that
// respect the (up-size, down-size, height) node invariant — a complete
// isomorphism invariant since any isomorphism preserves those profiles.
std::uint64_t canonical_form(const std::vector<Mask>& le) {
    const int m = static_cast<int>(le.size());
    std::vector<Mask> down(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (le[i] & bit(j)) down[j] |= bit(i);
    std::vector<int> height(m, -1);
    std::function<int(int)> h = [&](int i) -> int {
        if (height[i] >= 0) return height[i];
        int best = 0;
        Mask rest = le[i] & ~bit(i);
        while (rest) {
            int j = __builtin_ctz(rest);
            rest &= rest - 1;
            best = std::max(best, 1 + h(j));
        }
        return height[i] = best;
    };
    std::vector<std::uint32_t> inv(m);
    for (int i = 0; i < m; ++i)
        inv[i] = (std::uint32_t(__builtin_popcount(le[i])) << 16) |
                 (std::uint32_t(__builtin_popcount(down[i])) << 8) | std::uint32_t(h(i));

    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return inv[a] != inv[b] ? inv[a] < inv[b] : a < b; });
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < m;) {
        int j = i;
        while (j < m && inv[order[j]] == inv[order[i]]) ++j;
        blocks.emplace_back(order.begin() + i, order.begin() + j);
        i = j;
    }

    std::vector<int> perm(m);
    std::uint64_t best = ~std::uint64_t(0);
    for (;;) {
        int slot = 0;
        for (const auto& blk : blocks)
            for (int node : blk) perm[slot++] = node;
        std::uint64_t packed = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (le[perm[i]] & bit(perm[j])) packed |= std::uint64_t(1) << (i * m + j);
        best = std::min(best, packed);
        std::size_t bi = 0;
        while (bi < blocks.size() &&
               !std::next_permutation(blocks[bi].begin(), blocks[bi].end()))
            ++bi;  // wrapped block: carry into the next one
        if (bi == blocks.size()) break;
    }
    return best;
}

// Every poset on m+1 elements is a poset on m elements plus one maximal
// element sitting above an order ideal.
std::vector<IsoPoset> extend_posets(const std::vector<IsoPoset>& smaller) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<IsoPoset> out;
    for (const IsoPoset& p : smaller) {
        const int m = p.n;
        std::vector<Mask> down(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (p.le[i] & bit(j)) down[j] |= bit(i);
        for (Mask ideal = 0; ideal < bit(m); ++ideal) {
            bool ok = true;
            Mask rest = ideal;
            while (rest && ok) {
                int j = __builtin_ctz(rest);
                rest &= rest - 1;
                if (down[j] & ~ideal) ok = false;
            }
            if (!ok) continue;
            std::vector<Mask> le2(m + 1);
            for (int i = 0; i < m; ++i)
                le2[i] = p.le[i] | ((ideal >> i) & 1 ? bit(m) : 0);
            le2[m] = bit(m);
            if (seen.insert(canonical_form(le2)).second) out.push_back({m + 1, le2});
        }
    }
    return out;
}

struct TabledPoset {
    int n = 0;
    std::vector<Mask> le;
    std::vector<Mask> ups;  // ascending numeric order; index 0 = empty, last = full
    int u = 0;
    std::vector<std::uint16_t> imp, meet, join;  // row-major u*u

    std::uint16_t idx(Mask m) const {
        return std::uint16_t(std::lower_bound(ups.begin(), ups.end(), m) - ups.begin());
    }
};

TabledPoset make_tables(int n, std::vector<Mask> le) {
    TabledPoset t;
    t.n = n;
    t.le = std::move(le);
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    Preframe pf{n, t.le, std::vector<Mask>(n, 0), names};
    t.ups = upsets(pf);
    t.u = static_cast<int>(t.ups.size());
    t.imp.resize(t.u * t.u);
    t.meet.resize(t.u * t.u);
    t.join.resize(t.u * t.u);
    for (int a = 0; a < t.u; ++a)
        for (int b = 0; b < t.u; ++b) {
            Mask x = 0;
            for (int w = 0; w < n; ++w)
                if ((t.le[w] & t.ups[a] & ~t.ups[b]) == 0) x |= bit(w);
            t.imp[a * t.u + b] = t.idx(x);
            t.meet[a * t.u + b] = t.idx(t.ups[a] & t.ups[b]);
            t.join[a * t.u + b] = t.idx(t.ups[a] | t.ups[b]);
        }
    return t;
}

constexpr int kIpcMaxWorlds = 8;

struct PosetStore {
    std::mutex mu;
    std::vector<IsoPoset> iso[kIpcMaxWorlds];           // iso[m]: posets on m elements
    std::vector<TabledPoset> rooted[kIpcMaxWorlds + 1]; // rooted[k]: rooted posets, k worlds
    int built = 0;                                      // rooted[1..built] ready
};

PosetStore& store() {
    static PosetStore s;
    return s;
}

// Rooted poset on k worlds = new bottom (world 0) below an arbitrary poset on
// k-1 elements, bijectively up to isomorphism.
void ensure_rooted(int upto) {
    if (upto > kIpcMaxWorlds)
        throw CapExceeded("rooted poset enumeration is capped at " +
                          std::to_string(kIpcMaxWorlds) + " worlds");
    PosetStore& s = store();
    std::lock_guard<std::mutex> lock(s.mu);
    while (s.built < upto) {
        int k = s.built + 1;
        if (k == 1) {
            s.rooted[1].push_back(make_tables(1, {bit(0)}));
        } else {
            int m = k - 1;
            if (s.iso[m].empty())
                s.iso[m] = (m == 1) ? std::vector<IsoPoset>{{1, {bit(0)}}}
                                    : extend_posets(s.iso[m - 1]);
            for (const IsoPoset& p : s.iso[m]) {
                std::vector<Mask> le(k);
                le[0] = full_mask(k);
                for (int i = 0; i < m; ++i) le[i + 1] = p.le[i] << 1;
                s.rooted[k].push_back(make_tables(k, std::move(le)));
            }
        }
        s.built = k;
    }
}

// ---------------------------------------------------------------------------
// Formula compilation against the operation tables.

enum class OpK : std::uint8_t { Bot, Top, Atom, Meet, Join, Imp };

struct OpNode {
    OpK k;
    std::uint16_t a = 0, b = 0;
    std::int8_t slot = -1;   // atom slot
    std::int8_t level = -1;  // max atom slot below; -1 = constant subtree
};

struct Compiled {
    std::vector<OpNode> nodes;  // postorder, root last
    std::vector<std::string> atoms;
};

Compiled compile(Fm f) {
    Compiled c;
    for (const std::string& a : atoms(f)) c.atoms.push_back(a);  // sorted set
    std::unordered_map<Fm, int> seen;
    std::function<int(Fm)> go = [&](Fm g) -> int {
        if (auto it = seen.find(g); it != seen.end()) return it->second;
        OpNode node;
        switch (g->conn()) {
            case Conn::Bot:
                node.k = OpK::Bot;
                break;
            case Conn::Top:
                node.k = OpK::Top;
                break;
            case Conn::Atom: {
                node.k = OpK::Atom;
                auto pos = std::find(c.atoms.begin(), c.atoms.end(), g->name());
                node.slot = std::int8_t(pos - c.atoms.begin());
                node.level = node.slot;
                break;
            }
            default: {
                node.k = g->conn() == Conn::And  ? OpK::Meet
                         : g->conn() == Conn::Or ? OpK::Join
                                                 : OpK::Imp;
                int l = go(g->left()), r = go(g->right());
                node.a = std::uint16_t(l);
                node.b = std::uint16_t(r);
                node.level = std::max(c.nodes[l].level, c.nodes[r].level);
                break;
            }
        }
        int id = static_cast<int>(c.nodes.size());
        c.nodes.push_back(node);
        seen.emplace(g, id);
        return id;
    };
    go(f);
    return c;
}

// Sweeps every assignment of upset indices to the atom slots; returns the
// first refuting assignment (root world 0 not in the value) or nullopt. The
// odometer recomputes only nodes at or above the changed slot.
std::optional<std::vector<Mask>> sweep_poset(const TabledPoset& t, const Compiled& c,
                                             std::uint64_t cap) {
    const int k = static_cast<int>(c.atoms.size());
    std::uint64_t combos = 1;
    for (int i = 0; i < k; ++i) {
        combos *= std::uint64_t(t.u);
        if (combos > cap)
            throw CapExceeded("valuation sweep over " + std::to_string(t.u) + "^" +
                              std::to_string(k) + " assignments exceeds the cap");
    }
    const std::uint16_t top = std::uint16_t(t.u - 1);
    std::vector<int> slot_val(std::max(k, 1), 0);
    std::vector<std::uint16_t> val(c.nodes.size(), 0);
    auto recompute = [&](int from_level) {
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            const OpNode& nd = c.nodes[i];
            if (nd.level < from_level) continue;
            switch (nd.k) {
                case OpK::Bot:
                    val[i] = 0;
                    break;
                case OpK::Top:
                    val[i] = top;
                    break;
                case OpK::Atom:
                    val[i] = std::uint16_t(slot_val[nd.slot]);
                    break;
                case OpK::Meet:
                    val[i] = t.meet[val[nd.a] * t.u + val[nd.b]];
                    break;
                case OpK::Join:
                    val[i] = t.join[val[nd.a] * t.u + val[nd.b]];
                    break;
                case OpK::Imp:
                    val[i] = t.imp[val[nd.a] * t.u + val[nd.b]];
                    break;
            }
        }
    };
    recompute(-1);
    for (;;) {
        if (val.back() != top) {
            std::vector<Mask> assignment(k);
            for (int i = 0; i < k; ++i) assignment[i] = t.ups[slot_val[i]];
            return assignment;
        }
        int s = k - 1;
        while (s >= 0 && slot_val[s] == t.u - 1) {
            slot_val[s] = 0;
            --s;
        }
        if (s < 0) return std::nullopt;
        ++slot_val[s];
        recompute(s);
    }
}

}  // namespace

bool ipc_proves(Fm f) {
    f = normalize(f);
    require_propositional(f);
    return prove_seq({}, f);
}

bool ipc_proves(const std::vector<Fm>& hypotheses, Fm goal) {
    std::vector<Fm> gamma;
    for (Fm h : hypotheses) {
        h = normalize(h);
        require_propositional(h);
        if (!contains(gamma, h)) gamma.push_back(h);
    }
    goal = normalize(goal);
    require_propositional(goal);
    return prove_seq(std::move(gamma), goal);
}

bool ipc_equiv(Fm f, Fm g) {
    f = normalize(f);
    g = normalize(g);
    if (f == g) {
        require_propositional(f);
        return true;
    }
    return ipc_proves(mk_imp(f, g)) && ipc_proves(mk_imp(g, f));
}

std::optional<IpcCountermodel> find_ipc_countermodel(Fm f, int max_worlds) {
    f = normalize(f);
    require_propositional(f);
    if (max_worlds > kIpcMaxWorlds)
        throw CapExceeded("countermodel search is capped at " + std::to_string(kIpcMaxWorlds) +
                          " worlds");
    ensure_rooted(std::max(max_worlds, 0));
    Compiled c = compile(f);
    const std::uint64_t cap = enumeration_cap();
    PosetStore& s = store();
    for (int n = 1; n <= max_worlds; ++n) {
        for (const TabledPoset& t : s.rooted[n]) {
            auto assignment = sweep_poset(t, c, cap);
            if (!assignment) continue;
            std::vector<std::string> names(n);
            for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
            Preframe pf{n, t.le, std::vector<Mask>(n, 0), names};
            std::map<std::string, Mask> valuation;
            for (std::size_t i = 0; i < c.atoms.size(); ++i)
                valuation[c.atoms[i]] = (*assignment)[i];
            Model model(Frame(std::move(pf)), std::move(valuation));
            if (forces(model, 0, f))
                throw IpcError("internal disagreement between the table sweep and the "
                               "forcing evaluator");
            return IpcCountermodel{std::move(model), 0};
        }
    }
    return std::nullopt;
}

std::size_t rooted_poset_count(int n) {
    if (n <= 0) return 0;
    ensure_rooted(n);
    return store().rooted[n].size();
}

}  // namespace lewiskit
