#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lewiskit/conditions.hpp"
#include "lewiskit/kripke.hpp"
#include "lewiskit/registry.hpp"
#include "lewiskit/search.hpp"

namespace lewiskit {

// One row of the shipped pairing table: a (possibly composite) frame
// condition, the axiom scheme it corresponds to, and whether the condition is
// the finite-frames reading of a stronger order-theoretic property.
struct CorrespondenceRow {
    std::set<ConditionId> conds;
    std::string axiom;
    bool finite_only = false;
};

// Reads conditions.tsv: three whitespace-separated columns per line
// (condition[+condition...], axiom name, finite-only flag 0/1); '#' comments.
std::vector<CorrespondenceRow> load_pairing_table(const std::string& path);

struct CorrespondenceReport {
    bool pass = true;
    std::uint64_t frames_checked = 0;
    std::optional<Preframe> counterexample;  // first frame breaking the equivalence
    bool condition_held = false;             // the condition side on that frame
};

// Checks condition(F) <=> F validates the axiom (instantiated with distinct
// fresh atoms) over every labeled frame with 1..max_n worlds.
CorrespondenceReport correspondence_test(const Registry& reg, const std::set<ConditionId>& conds,
                                         const std::string& axiom, int max_n,
                                         const SearchLimits& lim = {}, int workers = 1);

}  // namespace lewiskit
