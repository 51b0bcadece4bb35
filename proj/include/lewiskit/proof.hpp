#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lewiskit/registry.hpp"

namespace lewiskit {

// One line of a Hilbert proof object. Substitutions are explicit; nothing is
// inferred by the checker beyond the conclusion of each step.
struct ProofStep {
    enum class Kind { Ax, Mp, Nec } kind = Kind::Ax;
    std::string scheme;                  // Ax
    std::map<std::string, Fm> binding;   // Ax
    int i = -1;                          // Mp: antecedent premise; Nec: premise
    int j = -1;                          // Mp: implication premise
    Fm conclusion = nullptr;             // filled in by check_proof
};

struct Proof {
    Fm goal = nullptr;
    std::string logic;  // optional default logic named by the file
    std::vector<ProofStep> steps;
};

struct CheckResult {
    bool accepted = false;
    std::string reason;  // empty when accepted
    int step = -1;       // 1-based step the rejection refers to, if any

    explicit operator bool() const { return accepted; }
};

// Verifies a proof object over the named logic:
//   - each axiom step instantiates a scheme the logic carries, with a binding
//     for exactly the template's metavariables;
//   - mp i j requires step j == Imp(step i, conclusion);
//   - nec i requires rule Narr in the logic and step i == Imp(l, r),
//     concluding Strictif(l, r); every step is a theorem, so the
//     "theorems only" side condition is built into the format;
//   - the final conclusion must equal the goal (after normalization).
// Fills each step's conclusion on success.
CheckResult check_proof(const Registry& reg, const std::string& logic, Proof& proof);

// Line-based proof files:
//   logic: NAME            (optional; a default the CLI may override)
//   goal: <formula>
//   1. ax NAME {?phi=..., ?psi=...}
//   2. mp 1 2              (from phi at 1 and phi -> psi at 2, conclude psi)
//   3. nec 2
// Step numbers are 1-based and must be consecutive.
Proof read_proof(std::istream& in);
Proof read_proof_file(const std::string& path);
std::string write_proof(const Proof& proof);

struct ProofFileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lewiskit
