#include "lewiskit/nnil.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "lewiskit/ipc.hpp"
#include "lewiskit/kripke.hpp"
#include "lewiskit/print.hpp"

namespace lewiskit {

bool is_nnil(Fm f) {
    f = normalize(f);
    switch (f->conn()) {
        case Conn::Bot:
        case Conn::Top:
        case Conn::Atom:
            return true;
        case Conn::And:
        case Conn::Or:
            return is_nnil(f->left()) && is_nnil(f->right());
        case Conn::Imp:
            return f->left()->conn() == Conn::Atom && is_nnil(f->right());
        case Conn::Meta:
            throw IpcError("metavariable ?" + f->name() + " in a fragment query");
        default:
            throw IpcError("modal connective in a fragment query: " + print(f));
    }
}

namespace {

// Cheap necessary condition for IPC equivalence: the forcing sets of a
// formula on a few fixed small rooted models, hashed. Equivalent formulas
// always collide, so classes can be bucketed by fingerprint and the decision
// procedure only runs within a bucket.
struct FingerprintContext {
    std::vector<Model> models;

    explicit FingerprintContext(const std::vector<std::string>& vars) {
        std::vector<Preframe> posets;
        posets.push_back(build_preframe(1, {}, {}));
        posets.push_back(build_preframe(2, {{0, 1}}, {}));
        posets.push_back(build_preframe(3, {{0, 1}, {1, 2}}, {}));
        posets.push_back(build_preframe(3, {{0, 1}, {0, 2}}, {}));
        for (const Preframe& pf : posets) {
            std::vector<Mask> ups = upsets(pf);
            const std::size_t k = vars.size();
            std::vector<std::size_t> pick(k, 0);
            for (;;) {
                std::map<std::string, Mask> val;
                for (std::size_t i = 0; i < k; ++i) val[vars[i]] = ups[pick[i]];
                models.emplace_back(Frame(pf), std::move(val));
                std::size_t s = k;
                while (s > 0 && pick[s - 1] == ups.size() - 1) pick[--s] = 0;
                if (s == 0) break;
                ++pick[s - 1];
            }
        }
    }

    std::uint64_t of(Fm f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (const Model& m : models) {
            Evaluator ev(m);
            h = (h ^ ev.eval(f)) * 1099511628211ull;
        }
        return h;
    }
};

struct Saturation {
    std::vector<std::string> vars;
    FingerprintContext fp;
    std::vector<Fm> reps;
    std::vector<std::uint64_t> rep_fp;
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::unordered_set<Fm> tried;
    bool changed = false;

    explicit Saturation(std::vector<std::string> vs) : vars(std::move(vs)), fp(vars) {}

    void offer(Fm cand) {
        if (!tried.insert(cand).second) return;
        std::uint64_t h = fp.of(cand);
        for (std::size_t i : buckets[h]) {
            if (!ipc_equiv(cand, reps[i])) continue;
            if (FmLess{}(cand, reps[i])) {
                reps[i] = cand;
                changed = true;
            }
            return;
        }
        buckets[h].push_back(reps.size());
        reps.push_back(cand);
        rep_fp.push_back(h);
        changed = true;
    }
};

}  // namespace

NnilClassTable build_table(const std::set<std::string>& vars, std::size_t max_vars) {
    if (vars.size() > max_vars)
        throw CapExceeded("class table over " + std::to_string(vars.size()) +
                          " variables exceeds the cap of " + std::to_string(max_vars));
    Saturation sat(std::vector<std::string>(vars.begin(), vars.end()));
    sat.offer(bot());
    sat.offer(top());
    for (const std::string& v : sat.vars) sat.offer(atom(v));
    do {
        sat.changed = false;
        const std::vector<Fm> snapshot = sat.reps;
        for (std::size_t i = 0; i < snapshot.size(); ++i)
            for (std::size_t j = i; j < snapshot.size(); ++j) {
                sat.offer(mk_and(snapshot[i], snapshot[j]));
                sat.offer(mk_or(snapshot[i], snapshot[j]));
            }
        for (const std::string& v : sat.vars)
            for (Fm r : snapshot) sat.offer(mk_imp(atom(v), r));
    } while (sat.changed);

    NnilClassTable table;
    table.vars = std::move(sat.vars);
    table.reps = std::move(sat.reps);
    std::sort(table.reps.begin(), table.reps.end(), FmLess{});
    return table;
}

std::vector<Fm> star_classes(Fm f, const NnilClassTable& table) {
    f = normalize(f);
    for (const std::string& a : atoms(f))
        if (std::find(table.vars.begin(), table.vars.end(), a) == table.vars.end())
            throw IpcError("atom '" + a + "' is outside the class table's variables");
    std::vector<Fm> out;
    for (Fm rep : table.reps)
        if (ipc_proves(mk_imp(rep, f))) out.push_back(rep);
    return out;
}

Fm star(Fm f, const NnilClassTable& table) {
    std::vector<Fm> parts = star_classes(f, table);
    if (parts.empty()) return bot();
    Fm acc = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) acc = mk_or(acc, parts[i]);
    return acc;
}

}  // namespace lewiskit
