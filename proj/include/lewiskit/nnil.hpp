#pragma once

#include <set>
#include <string>
#include <vector>

#include "lewiskit/formula.hpp"

namespace lewiskit {

// Membership in the no-nestings-of-implications-to-the-left grammar:
// bot | top | p | (f /\ f) | (f \/ f) | (p -> f). Rejects modal connectives.
bool is_nnil(Fm f);

struct NnilClassTable {
    std::vector<std::string> vars;  // sorted
    // One representative per IPC-equivalence class, pairwise inequivalent and
    // saturated under the grammar constructors; each is the smallest member
    // discovered (node count, then print string), listed in that order.
    std::vector<Fm> reps;
};

// Fixpoint saturation from {bot, top} and the variables under conjunction,
// disjunction and (p -> .), deduplicating classes with the decision
// procedure. max_vars guards the combinatorial blow-up.
NnilClassTable build_table(const std::set<std::string>& vars, std::size_t max_vars = 2);

// Representatives that imply f — the disjuncts of star, in table order.
std::vector<Fm> star_classes(Fm f, const NnilClassTable& table);

// Best approximation of f from below inside the fragment: the disjunction of
// star_classes (bot when empty — bot is itself always a disjunct).
Fm star(Fm f, const NnilClassTable& table);

}  // namespace lewiskit
