#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lewiskit/kripke.hpp"

namespace lewiskit {

// First-order frame conditions on (W, <=, <|). Notation below: < is the
// strict part of <=, composites read left to right (k <| l <= m).
enum class ConditionId {
    box_p,                // k <= l <| m  =>  some x with k <| x <= m
    arrow_p,              // k <= l <| m  =>  k <| m   (the frame condition)
    mix,                  // k <= l <| m <= n  =>  k <| n
    brilliant,            // k <| l <= m  =>  k <| m
    semi_transitive,      // k <| l <| m  =>  some x with k <| x <= m
    gathering,            // k <| l <| m  =>  l <= m
    noetherian,           // finite reading: <| is acyclic
    supergathering,       // k <| l <| m  =>  some x with k <| x, l < x <= m
    montagna,             // k <| l <= m  =>  some x with k <| x, l <= x <= m,
                          //   and the <|.<= successors of x are within those of m
    strong,               // k <| l  =>  k <= l
    dominated,            // k < l  =>  k <| l
    weakly_dominated,     // k < l  =>  some m with k <| m <= l
    weakly_semilinear,    // k <| l and k <| m  =>  l, m comparable
    strongly_semilinear,  // k <| l <= l' and k <| m <= m'  =>  l', m' comparable
    semi_dense,           // k <| l  =>  some x <= l and y with k <| y <| x
    pre_reflexive,        // k <| l  =>  some x with l <| x <= l
    semi_nucleic,         // k <| l  =>  some m >= k with l <= m and
                          //   some m' with m <| m' <= l
    almost_reflexive,     // k <| l  =>  l <| l
};

const std::vector<ConditionId>& all_conditions();
const std::string& condition_name(ConditionId c);
ConditionId condition_from_name(const std::string& name);  // throws ModelError

bool check_condition(const Preframe& p, ConditionId c);
bool check_conditions(const Preframe& p, const std::set<ConditionId>& cs);

// Parses "noetherian+gathering" / comma lists into a condition set.
std::set<ConditionId> parse_condition_set(const std::string& text);

}  // namespace lewiskit
