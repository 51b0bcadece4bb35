#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lewiskit/formula.hpp"
#include "lewiskit/kripke.hpp"

namespace lewiskit {

struct IpcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Decides intuitionistic propositional validity by terminating backward
// search in a contraction-free sequent calculus (implication-left rules keyed
// on the antecedent's shape), memoized on canonicalized sequents. Rejects
// formulas containing strict implication or metavariables.
bool ipc_proves(Fm f);

// Sequent interface: goal provable from the hypotheses.
bool ipc_proves(const std::vector<Fm>& hypotheses, Fm goal);

bool ipc_equiv(Fm f, Fm g);

struct IpcCountermodel {
    Model model;  // modal relation empty; the refuting world is the root 0
    int world;
};

// Bounded refutation search over rooted partial orders up to isomorphism
// (1..max_worlds elements), sweeping upset valuations per atom. A found model
// is confirmed through the general forcing evaluator before being returned.
// nullopt means no countermodel within the bound.
std::optional<IpcCountermodel> find_ipc_countermodel(Fm f, int max_worlds);

// Isomorphism classes of rooted partial orders on exactly n elements
// (supported for n <= 8); exposed so tests can pin the sizes.
std::size_t rooted_poset_count(int n);

}  // namespace lewiskit
