#include "lewiskit/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "lewiskit/model_io.hpp"
#include "lewiskit/parser.hpp"

namespace lewiskit {

namespace {

constexpr int kPosetEnumMax = 5;  // 2^(n*(n-1)) candidate masks

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

// Partition-order enumeration core shared by the public streams. The visitor
// sees posets in ascending order of the packed strict-pair mask.
bool posets_walk(int n, const std::function<bool(const Preframe&)>& visit) {
    if (n < 0) throw ModelError("negative world count");
    if (n == 0) return true;
    if (n > kPosetEnumMax)
        throw CapExceeded("labeled poset enumeration is capped at " +
                          std::to_string(kPosetEnumMax) + " worlds");
    const int pairs = n * (n - 1);
    const std::uint64_t total = std::uint64_t(1) << pairs;
    auto names = default_names(n);
    std::vector<Mask> le(n);
    for (std::uint64_t m = 0; m < total; ++m) {
        for (int i = 0; i < n; ++i) le[i] = bit(i);
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if ((m >> idx) & 1) le[i] |= bit(j);
                ++idx;
            }
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if ((le[i] & bit(j)) && (le[j] & bit(i))) ok = false;  // antisymmetry
        for (int i = 0; i < n && ok; ++i) {
            Mask rest = le[i] & ~bit(i);
            while (rest && ok) {
                int j = __builtin_ctz(rest);
                rest &= rest - 1;
                if (le[j] & ~le[i]) ok = false;  // transitivity
            }
        }
        if (!ok) continue;
        Preframe pf{n, le, std::vector<Mask>(n, 0), names};
        if (!visit(pf)) return false;
    }
    return true;
}

// Frame stream with optional sharding (by poset ordinal) and a cancellation
// flag, the machinery behind both enumerate_frames and the parallel search.
bool frames_walk(int n, const std::set<ConditionId>& conds, int shard, int nshards,
                 const std::atomic<bool>* stop,
                 const std::function<bool(const Frame&)>& visit) {
    const Mask fm = full_mask(n);
    std::uint64_t ordinal = 0;
    std::vector<Mask> lt(n, 0);
    bool keep = true;
    posets_walk(n, [&](const Preframe& poset) {
        if (ordinal++ % nshards != std::uint64_t(shard)) return true;
        if (stop && stop->load(std::memory_order_relaxed)) return false;
        // Grow the modal rows world by world; antitonicity along the order is
        // exactly the frame condition, so every leaf is a frame.
        std::function<bool(int)> grow = [&](int w) -> bool {
            if (w == n) {
                Preframe pf = poset;
                pf.lt = lt;
                if (!check_conditions(pf, conds)) return true;
                Frame fr(std::move(pf));
                return visit(fr);
            }
            if (stop && stop->load(std::memory_order_relaxed)) return false;
            for (Mask r = 0;; ++r) {
                bool ok = true;
                for (int k = 0; k < w && ok; ++k) {
                    if (poset.le_rel(k, w) && (r & ~lt[k])) ok = false;
                    if (poset.le_rel(w, k) && (lt[k] & ~r)) ok = false;
                }
                if (ok) {
                    lt[w] = r;
                    if (!grow(w + 1)) return false;
                }
                if (r == fm) break;
            }
            return true;
        };
        keep = grow(0);
        return keep;
    });
    return keep;
}

// Refutability of a formula on a frame is invariant under relabeling, so a
// frame whose isomorphism class is already known refutation-free can be
// skipped. Only "no refutation" verdicts are cached: frames that would refute
// stop the search at first contact, which keeps the first hit — and with it
// the reported countermodel — identical to the unmemoized scan. Canonical
// keys pack the relabeled (le, lt) rows into one word (2n rows of n bits,
// fine for n <= 5) and take the minimum over all permutations. The
// canonicalization has a fixed cost per frame, so the cache only switches on
// when the per-frame valuation sweep is the dominant term.
class IsoValidMemo {
public:
    IsoValidMemo(int n, std::size_t num_atoms) : n_(n), enabled_(n >= 3 && num_atoms >= 2) {
        if (!enabled_) return;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            perms_.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    bool known_valid(const Preframe& pf) {
        if (!enabled_) return false;
        return valid_.count(canonical(pf)) != 0;
    }

    void record_valid(const Preframe& pf) {
        if (enabled_) valid_.insert(canonical(pf));
    }

private:
    std::uint64_t canonical(const Preframe& pf) const {
        std::uint64_t best = ~std::uint64_t(0);
        for (const std::vector<int>& p : perms_) {
            std::uint64_t key = 0;
            for (int i = 0; i < n_; ++i) {
                Mask le = 0, lt = 0;
                for (int j = 0; j < n_; ++j) {
                    if (pf.le[i] & bit(j)) le |= bit(p[j]);
                    if (pf.lt[i] & bit(j)) lt |= bit(p[j]);
                }
                key |= std::uint64_t(le) << (p[i] * n_);
                key |= std::uint64_t(lt) << ((n_ + p[i]) * n_);
            }
            best = std::min(best, key);
        }
        return best;
    }

    int n_;
    bool enabled_;
    std::vector<std::vector<int>> perms_;
    std::unordered_set<std::uint64_t> valid_;
};

}  // namespace

bool enumerate_posets(int n, const std::function<bool(const Preframe&)>& visit) {
    return posets_walk(n, visit);
}

bool enumerate_preframes(int n, const std::function<bool(const Preframe&)>& visit,
                         const SearchLimits& lim) {
    if (n > lim.max_worlds)
        throw CapExceeded("preframe enumeration capped at " + std::to_string(lim.max_worlds) +
                          " worlds (requested " + std::to_string(n) + ")");
    if (n <= 0) {
        if (n < 0) throw ModelError("negative world count");
        return true;
    }
    const std::uint64_t modal_total = std::uint64_t(1) << (n * n);
    const Mask fm = full_mask(n);
    bool keep = true;
    posets_walk(n, [&](const Preframe& poset) {
        Preframe pf = poset;
        for (std::uint64_t m = 0; m < modal_total; ++m) {
            for (int i = 0; i < n; ++i) pf.lt[i] = Mask(m >> (i * n)) & fm;
            if (!visit(pf)) {
                keep = false;
                return false;
            }
        }
        return true;
    });
    return keep;
}

bool enumerate_frames(int n, const std::set<ConditionId>& conds,
                      const std::function<bool(const Frame&)>& visit, const SearchLimits& lim) {
    if (n > lim.max_worlds)
        throw CapExceeded("frame enumeration capped at " + std::to_string(lim.max_worlds) +
                          " worlds (requested " + std::to_string(n) + ")");
    if (n < 0) throw ModelError("negative world count");
    if (n == 0) return true;
    return frames_walk(n, conds, 0, 1, nullptr, visit);
}

std::uint64_t count_frames(int n, const std::set<ConditionId>& conds, const SearchLimits& lim) {
    std::uint64_t count = 0;
    enumerate_frames(
        n, conds,
        [&](const Frame&) {
            ++count;
            return true;
        },
        lim);
    return count;
}

std::optional<FoundCountermodel> find_countermodel(Fm f, const std::set<ConditionId>& conds,
                                                   int max_n, const SearchLimits& lim,
                                                   int workers) {
    f = normalize(f);
    if (max_n > lim.max_worlds)
        throw CapExceeded("countermodel search capped at " + std::to_string(lim.max_worlds) +
                          " worlds (requested " + std::to_string(max_n) + ")");
    const std::uint64_t cap = lim.valuation_cap ? lim.valuation_cap : enumeration_cap();
    const std::size_t num_atoms = atoms(f).size();
    if (workers < 1) workers = 1;
    for (int n = 1; n <= max_n; ++n) {
        if (workers == 1) {
            std::optional<FoundCountermodel> found;
            IsoValidMemo memo(n, num_atoms);
            frames_walk(n, conds, 0, 1, nullptr, [&](const Frame& fr) {
                if (memo.known_valid(fr.pre())) return true;
                auto r = find_refuting_valuation(fr, f, cap);
                if (!r) {
                    memo.record_valid(fr.pre());
                    return true;
                }
                found = FoundCountermodel{Model(fr, r->valuation), r->world};
                return false;
            });
            if (found) return found;
            continue;
        }
        std::vector<std::optional<FoundCountermodel>> slot(workers);
        std::vector<std::exception_ptr> errors(workers);
        std::atomic<bool> stop{false};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int id = 0; id < workers; ++id) {
            pool.emplace_back([&, id] {
                try {
                    IsoValidMemo memo(n, num_atoms);
                    frames_walk(n, conds, id, workers, &stop, [&](const Frame& fr) {
                        if (memo.known_valid(fr.pre())) return true;
                        auto r = find_refuting_valuation(fr, f, cap);
                        if (!r) {
                            memo.record_valid(fr.pre());
                            return true;
                        }
                        slot[id] = FoundCountermodel{Model(fr, r->valuation), r->world};
                        stop.store(true, std::memory_order_relaxed);
                        return false;
                    });
                } catch (...) {
                    errors[id] = std::current_exception();
                    stop.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        for (auto& s : slot)
            if (s) return s;
    }
    return std::nullopt;
}

WitnessCheck verify_witness(const Registry& reg, const NonDerivationWitness& w) {
    const Logic* logic = reg.find_logic(w.logic);
    if (!logic) return {false, "unknown logic '" + w.logic + "'"};
    if (!logic->semantic_class)
        return {false, "logic '" + w.logic + "' declares no semantic class"};
    if (w.world < 0 || w.world >= w.model.n())
        return {false, "world index " + std::to_string(w.world) + " out of range"};
    for (ConditionId c : *logic->semantic_class)
        if (!check_condition(w.model.pre(), c))
            return {false, "frame violates condition '" + std::string(condition_name(c)) + "'"};
    if (forces(w.model, w.world, w.formula))
        return {false, "formula is forced at world '" + w.model.pre().name_of(w.world) + "'"};
    return {true, ""};
}

std::vector<FixtureCase> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open manifest: " + path);
    std::vector<FixtureCase> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        FixtureCase c;
        if (!(is >> c.file)) continue;
        if (c.file[0] == '#') continue;  // formulas contain '#', so only whole-line comments
        std::string formula_text;
        if (!(is >> c.logic >> c.world) || !std::getline(is, formula_text))
            throw ModelError("manifest line " + std::to_string(lineno) +
                             ": expected 'file logic world formula'");
        try {
            c.formula = parse_normalized(formula_text);
        } catch (const ParseError& e) {
            throw ModelError("manifest line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(std::move(c));
    }
    return out;
}

NonDerivationWitness load_fixture(const std::string& fixtures_dir, const FixtureCase& c) {
    ModelFile mf = read_model_file(fixtures_dir + "/" + c.file);
    Model m = mf.model();
    int world = m.pre().index_of(c.world);
    return NonDerivationWitness{c.logic, c.formula, std::move(m), world};
}

SpotcheckResult soundness_spotcheck(const Registry& reg, const std::string& logic, Fm theorem,
                                    int max_n, const SearchLimits& lim) {
    const Logic& l = reg.logic(logic);
    if (!l.semantic_class)
        throw RegistryError("logic '" + logic + "' declares no semantic class");
    auto found = find_countermodel(theorem, *l.semantic_class, max_n, lim, 1);
    if (found) return {false, std::move(found)};
    return {true, std::nullopt};
}

}  // namespace lewiskit
