#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lewiskit/conditions.hpp"
#include "lewiskit/formula.hpp"

namespace lewiskit {

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A named axiom template; metavariables are the schematic letters.
struct Scheme {
    std::string name;
    Fm tmpl = nullptr;
};

// A named Hilbert system: inference rules, axiom schemes by name, and an
// optional class of frames (as a set of conditions) the logic is sound for.
// An empty condition set means "all frames"; nullopt means no semantic class
// is claimed (soundness spot-checks are skipped for such logics).
struct Logic {
    std::string name;
    bool rule_mp = true;
    bool rule_nec = false;  // from a proved phi -> psi conclude phi ~> psi
    std::vector<std::string> schemes;
    std::optional<std::set<ConditionId>> semantic_class;

    bool has_scheme(const std::string& s) const;
};

class Registry {
public:
    // Loads "NAME: template" scheme lines and
    // "NAME: rules=MP,Narr schemes=IPC,Tr,... class=cond1,cond2|-|all" logic lines.
    static Registry load(const std::string& schemes_path, const std::string& logics_path);
    static Registry load_from_dir(const std::string& data_dir);

    const Scheme& scheme(const std::string& name) const;        // throws
    const Scheme* find_scheme(const std::string& name) const;   // nullptr if absent
    const Logic& logic(const std::string& name) const;          // throws
    const Logic* find_logic(const std::string& name) const;

    const std::vector<Scheme>& schemes() const { return schemes_; }
    const std::vector<Logic>& logics() const { return logics_; }

    void add_scheme(Scheme s);  // used by tests; rejects duplicate names
    void add_logic(Logic l);

    // Replaces each metavariable by a distinct fresh atom (sorted metavariable
    // names map to p, q, r, ...) — the form used by correspondence testing.
    Fm fresh_instance(const std::string& scheme_name) const;

private:
    std::vector<Scheme> schemes_;
    std::vector<Logic> logics_;
    std::map<std::string, std::size_t> scheme_index_;
    std::map<std::string, std::size_t> logic_index_;
};

// Locates the data directory (schemes.txt / logics.txt / conditions.tsv):
// $LEWISKIT_DATA if set, else ./data, else the build-time source path.
std::string default_data_dir();

// Locates the fixtures directory the same way via $LEWISKIT_FIXTURES.
std::string default_fixtures_dir();

// Builds the admissible-rule instance
//   (chi -> (phi_n \/ phi_{n+1})) ~> (chi)(phi_0) \/ ... \/ (chi)(phi_{n+1})
// where chi is the conjunction of the given implications, phi_0..phi_{n-1}
// are their antecedents, and (chi)(.) is chi_translate. The empty conjunction
// is top.
Fm v_instance(const std::vector<Fm>& chi_conjuncts, Fm phi_n, Fm phi_n1);

}  // namespace lewiskit
