#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lewiskit/formula.hpp"

namespace lewiskit {

// Worlds are indices 0..n-1 packed into bit masks; everything here is sized
// for desk-scale exhaustive search, hence the hard cap below.
using Mask = std::uint32_t;
constexpr int kMaxWorlds = 31;

inline Mask bit(int w) { return Mask(1) << w; }
inline Mask full_mask(int n) { return n == 0 ? 0 : (Mask(1) << n) - 1; }

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (W, <=, <|): a partial order <= ("order") and an arbitrary modal relation <|
// ("modal"). Rows are successor masks: le[k] = {l : k <= l} including k
// itself, lt[k] = {l : k <| l}.
struct Preframe {
    int n = 0;
    std::vector<Mask> le;
    std::vector<Mask> lt;
    std::vector<std::string> names;  // one per world; defaults to "0","1",...

    bool le_rel(int k, int l) const { return le[k] & bit(l); }
    bool lt_rel(int k, int l) const { return lt[k] & bit(l); }

    // {l : l <= k} — the order column, used by the frame-condition predicates.
    Mask le_pred(int k) const;
    // Worlds with at least one <|-predecessor.
    Mask modal_range() const;

    const std::string& name_of(int w) const { return names[w]; }
    int index_of(const std::string& token) const;  // name or decimal index
};

// Builds the preframe whose order is the reflexive-transitive closure of
// order_pairs. Rejects out-of-range worlds and order cycles (antisymmetry).
Preframe build_preframe(int n, const std::vector<std::pair<int, int>>& order_pairs,
                        const std::vector<std::pair<int, int>>& modal_pairs,
                        std::vector<std::string> names = {});

// The frame condition: k <= l <| m implies k <| m.
bool is_frame(const Preframe& p);

// A preframe validated to satisfy is_frame.
class Frame {
public:
    explicit Frame(Preframe p);
    const Preframe& pre() const { return pf_; }
    int n() const { return pf_.n; }

private:
    Preframe pf_;
};

// Frame plus an upward-closed valuation. Atoms absent from the valuation are
// false everywhere (the empty upset); forcing never errors on unknown atoms.
class Model {
public:
    Model(Frame frame, std::map<std::string, Mask> valuation);
    const Frame& frame() const { return frame_; }
    const Preframe& pre() const { return frame_.pre(); }
    int n() const { return frame_.n(); }
    const std::map<std::string, Mask>& valuation() const { return val_; }
    Mask atom_mask(const std::string& name) const;

private:
    Frame frame_;
    std::map<std::string, Mask> val_;
};

// Computes forcing sets bottom-up with a per-model memo: eval(f) is the mask
// of worlds forcing f. Implication quantifies over <=-successors, strict
// implication over <|-successors.
class Evaluator {
public:
    explicit Evaluator(const Model& m) : m_(m) {}
    Mask eval(Fm f);

private:
    const Model& m_;
    std::unordered_map<Fm, Mask> memo_;
};

bool forces(const Model& m, int world, Fm f);
bool model_validates(const Model& m, Fm f);

// All upward-closed subsets of the order, in increasing numeric order.
std::vector<Mask> upsets(const Preframe& p);

// Persistence: for all upsets U,V the set U ~> V = {k : every l with k <| l
// and l in U lies in V} is again an upset. Brute force over all upset pairs.
bool persistence_holds(const Preframe& p);

struct Refutation {
    std::map<std::string, Mask> valuation;
    int world;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Searches all valuations of the atoms of f by upsets for one refuting f
// somewhere. cap bounds the number of valuation combinations tried.
std::optional<Refutation> find_refuting_valuation(const Frame& fr, Fm f, std::uint64_t cap);

// Validity on the frame: no refuting valuation of the atoms of f exists.
bool frame_validates(const Frame& fr, Fm f, std::uint64_t cap);
bool frame_validates(const Frame& fr, Fm f);  // cap from configuration

// Default enumeration cap, overridable via the LEWISKIT_CAP environment
// variable (read once per process).
std::uint64_t enumeration_cap();

}  // namespace lewiskit
