#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "lewiskit/conditions.hpp"
#include "lewiskit/kripke.hpp"
#include "lewiskit/registry.hpp"

namespace lewiskit {

struct SearchLimits {
    int max_worlds = 5;               // requests beyond this raise CapExceeded
    std::uint64_t valuation_cap = 0;  // 0 means enumeration_cap()
};

// All labeled partial orders on exactly n worlds, ascending by the packed
// mask of strict pairs. The visitor returns false to stop early; the return
// value says whether the stream was exhausted.
bool enumerate_posets(int n, const std::function<bool(const Preframe&)>& visit);

// All labeled preframes on exactly n worlds: posets as above, the modal
// relation as an ascending n*n-bit counter. No persistence filtering.
bool enumerate_preframes(int n, const std::function<bool(const Preframe&)>& visit,
                         const SearchLimits& lim = {});

// All labeled frames on exactly n worlds satisfying conds. The modal rows are
// grown world by world under the antitonicity constraint, so only genuine
// frames are ever materialized. n = 0 is an empty stream.
bool enumerate_frames(int n, const std::set<ConditionId>& conds,
                      const std::function<bool(const Frame&)>& visit,
                      const SearchLimits& lim = {});

std::uint64_t count_frames(int n, const std::set<ConditionId>& conds,
                           const SearchLimits& lim = {});

struct FoundCountermodel {
    Model model;
    int world;
};

// First (frame, valuation, world) refuting f over frames of 1..max_n worlds
// satisfying conds. nullopt means "none within the bound" — never validity.
// With workers > 1 the frame stream is sharded and "first" is no longer the
// global enumeration order.
std::optional<FoundCountermodel> find_countermodel(Fm f, const std::set<ConditionId>& conds,
                                                   int max_n, const SearchLimits& lim = {},
                                                   int workers = 1);

// A non-derivability certificate: the model's frame lies in the semantic
// class of the logic, yet the formula fails at the given world.
struct NonDerivationWitness {
    std::string logic;
    Fm formula = nullptr;
    Model model;
    int world = 0;
};

struct WitnessCheck {
    bool pass = false;
    std::string reason;  // empty on pass
};

WitnessCheck verify_witness(const Registry& reg, const NonDerivationWitness& w);

// One line of a fixtures manifest: model file (relative to the manifest),
// logic name, world token, formula.
struct FixtureCase {
    std::string file;
    std::string logic;
    std::string world;
    Fm formula = nullptr;
};

std::vector<FixtureCase> read_manifest(const std::string& path);

// Loads the model file and resolves the world token into a checkable witness.
NonDerivationWitness load_fixture(const std::string& fixtures_dir, const FixtureCase& c);

struct SpotcheckResult {
    bool pass = false;
    std::optional<FoundCountermodel> counter;
};

// Searches the logic's semantic class up to max_n worlds for a refutation of
// theorem. Throws RegistryError when the logic declares no semantic class.
SpotcheckResult soundness_spotcheck(const Registry& reg, const std::string& logic, Fm theorem,
                                    int max_n, const SearchLimits& lim = {});

}  // namespace lewiskit
