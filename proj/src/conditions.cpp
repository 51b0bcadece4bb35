#include "lewiskit/conditions.hpp"

#include <array>
#include <sstream>

namespace lewiskit {

namespace {

const std::array<std::pair<ConditionId, const char*>, 18> kNames = {{
    {ConditionId::box_p, "box_p"},
    {ConditionId::arrow_p, "arrow_p"},
    {ConditionId::mix, "mix"},
    {ConditionId::brilliant, "brilliant"},
    {ConditionId::semi_transitive, "semi_transitive"},
    {ConditionId::gathering, "gathering"},
    {ConditionId::noetherian, "noetherian"},
    {ConditionId::supergathering, "supergathering"},
    {ConditionId::montagna, "montagna"},
    {ConditionId::strong, "strong"},
    {ConditionId::dominated, "dominated"},
    {ConditionId::weakly_dominated, "weakly_dominated"},
    {ConditionId::weakly_semilinear, "weakly_semilinear"},
    {ConditionId::strongly_semilinear, "strongly_semilinear"},
    {ConditionId::semi_dense, "semi_dense"},
    {ConditionId::pre_reflexive, "pre_reflexive"},
    {ConditionId::semi_nucleic, "semi_nucleic"},
    {ConditionId::almost_reflexive, "almost_reflexive"},
}};

// <|.<= successors of x: everything above (in <=) something x points to.
Mask modal_up(const Preframe& p, int x) {
    Mask m = 0;
    for (int y = 0; y < p.n; ++y)
        if (p.lt_rel(x, y)) m |= p.le[y];
    return m;
}

bool comparable(const Preframe& p, int a, int b) { return p.le_rel(a, b) || p.le_rel(b, a); }

bool pairwise_comparable(const Preframe& p, Mask s) {
    for (int a = 0; a < p.n; ++a)
        if (s & bit(a))
            for (int b = a + 1; b < p.n; ++b)
                if ((s & bit(b)) && !comparable(p, a, b)) return false;
    return true;
}

bool acyclic_modal(const Preframe& p) {
    std::vector<Mask> reach = p.lt;  // transitive closure of <|
    for (bool changed = true; changed;) {
        changed = false;
        for (int k = 0; k < p.n; ++k) {
            Mask row = reach[k];
            for (int l = 0; l < p.n; ++l)
                if (row & bit(l)) row |= reach[l];
            if (row != reach[k]) {
                reach[k] = row;
                changed = true;
            }
        }
    }
    for (int k = 0; k < p.n; ++k)
        if (reach[k] & bit(k)) return false;
    return true;
}

}  // namespace

const std::vector<ConditionId>& all_conditions() {
    static const std::vector<ConditionId> all = [] {
        std::vector<ConditionId> v;
        for (auto& [id, name] : kNames) v.push_back(id);
        return v;
    }();
    return all;
}

const std::string& condition_name(ConditionId c) {
    static const std::array<std::string, 18> names = [] {
        std::array<std::string, 18> a;
        for (auto& [id, name] : kNames) a[static_cast<int>(id)] = name;
        return a;
    }();
    return names[static_cast<int>(c)];
}

ConditionId condition_from_name(const std::string& name) {
    for (auto& [id, n] : kNames)
        if (name == n) return id;
    throw ModelError("unknown frame condition '" + name + "'");
}

std::set<ConditionId> parse_condition_set(const std::string& text) {
    std::set<ConditionId> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.insert(condition_from_name(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '+' || c == ',' || c == ' ')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    return out;
}

bool check_condition(const Preframe& p, ConditionId c) {
    const int n = p.n;
    switch (c) {
        case ConditionId::box_p:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.le_rel(k, l))
                        for (int m = 0; m < n; ++m)
                            if (p.lt_rel(l, m) && !(p.lt[k] & p.le_pred(m))) return false;
            return true;
        case ConditionId::arrow_p:
            return is_frame(p);
        case ConditionId::mix:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.le_rel(k, l))
                        for (int m = 0; m < n; ++m)
                            if (p.lt_rel(l, m) && (p.le[m] & ~p.lt[k])) return false;
            return true;
        case ConditionId::brilliant:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l) && (p.le[l] & ~p.lt[k])) return false;
            return true;
        case ConditionId::semi_transitive:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l))
                        for (int m = 0; m < n; ++m)
                            if (p.lt_rel(l, m) && !(p.lt[k] & p.le_pred(m))) return false;
            return true;
        case ConditionId::gathering:
            for (int l = 0; l < n; ++l)
                if ((p.modal_range() & bit(l)) && (p.lt[l] & ~p.le[l])) return false;
            return true;
        case ConditionId::noetherian:
            return acyclic_modal(p);
        case ConditionId::supergathering:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l))
                        for (int m = 0; m < n; ++m)
                            if (p.lt_rel(l, m) &&
                                !(p.lt[k] & (p.le[l] & ~bit(l)) & p.le_pred(m)))
                                return false;
            return true;
        case ConditionId::montagna:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l))
                        for (int m = 0; m < n; ++m)
                            if (p.le_rel(l, m)) {
                                Mask cand = p.lt[k] & p.le[l] & p.le_pred(m);
                                bool ok = false;
                                for (int x = 0; x < n && !ok; ++x)
                                    if ((cand & bit(x)) && !(modal_up(p, x) & ~modal_up(p, m)))
                                        ok = true;
                                if (!ok) return false;
                            }
            return true;
        case ConditionId::strong:
            for (int k = 0; k < n; ++k)
                if (p.lt[k] & ~p.le[k]) return false;
            return true;
        case ConditionId::dominated:
            for (int k = 0; k < n; ++k)
                if ((p.le[k] & ~bit(k)) & ~p.lt[k]) return false;
            return true;
        case ConditionId::weakly_dominated:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (l != k && p.le_rel(k, l) && !(p.lt[k] & p.le_pred(l))) return false;
            return true;
        case ConditionId::weakly_semilinear:
            for (int k = 0; k < n; ++k)
                if (!pairwise_comparable(p, p.lt[k])) return false;
            return true;
        case ConditionId::strongly_semilinear:
            for (int k = 0; k < n; ++k)
                if (!pairwise_comparable(p, modal_up(p, k))) return false;
            return true;
        case ConditionId::semi_dense:
            for (int k = 0; k < n; ++k) {
                Mask two_steps = 0;
                for (int y = 0; y < n; ++y)
                    if (p.lt_rel(k, y)) two_steps |= p.lt[y];
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l) && !(two_steps & p.le_pred(l))) return false;
            }
            return true;
        case ConditionId::pre_reflexive:
            for (int l = 0; l < n; ++l)
                if ((p.modal_range() & bit(l)) && !(p.lt[l] & p.le_pred(l))) return false;
            return true;
        case ConditionId::semi_nucleic:
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (p.lt_rel(k, l)) {
                        Mask cand = p.le[k] & p.le[l];  // m above both k and l
                        bool ok = false;
                        for (int m = 0; m < n && !ok; ++m)
                            if ((cand & bit(m)) && (p.lt[m] & p.le_pred(l))) ok = true;
                        if (!ok) return false;
                    }
            return true;
        case ConditionId::almost_reflexive:
            for (int l = 0; l < n; ++l)
                if ((p.modal_range() & bit(l)) && !p.lt_rel(l, l)) return false;
            return true;
    }
    return false;  // unreachable
}

bool check_conditions(const Preframe& p, const std::set<ConditionId>& cs) {
    for (ConditionId c : cs)
        if (!check_condition(p, c)) return false;
    return true;
}

}  // namespace lewiskit
