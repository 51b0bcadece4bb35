#include "lewiskit/registry.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lewiskit/parser.hpp"
#include "lewiskit/print.hpp"

#ifndef LEWISKIT_SOURCE_DIR
#define LEWISKIT_SOURCE_DIR ""
#endif

namespace lewiskit {

bool Logic::has_scheme(const std::string& s) const {
    return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// The ten-scheme intuitionistic base; "IPC" in a logic's scheme list expands
// to these names.
const std::vector<std::string>& ipc_scheme_names() {
    static const std::vector<std::string> names = {"a1", "a2", "a3", "a4", "a5",
                                                   "a6", "a7", "a8", "a9", "a10"};
    return names;
}

}  // namespace

Registry Registry::load(const std::string& schemes_path, const std::string& logics_path) {
    Registry r;
    {
        std::ifstream in(schemes_path);
        if (!in) throw RegistryError("cannot open scheme registry: " + schemes_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            line = strip(line);
            if (line.empty() || line[0] == '#') continue;
            std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw RegistryError(schemes_path + ":" + std::to_string(lineno) +
                                    ": expected 'NAME: template'");
            Scheme s;
            s.name = strip(line.substr(0, colon));
            try {
                s.tmpl = normalize(parse(line.substr(colon + 1)));
            } catch (const ParseError& e) {
                throw RegistryError(schemes_path + ":" + std::to_string(lineno) + ": " + e.what());
            }
            r.add_scheme(std::move(s));
        }
    }
    {
        std::ifstream in(logics_path);
        if (!in) throw RegistryError("cannot open logic registry: " + logics_path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto fail = [&](const std::string& msg) -> RegistryError {
                return RegistryError(logics_path + ":" + std::to_string(lineno) + ": " + msg);
            };
            line = strip(line);
            if (line.empty() || line[0] == '#') continue;
            std::size_t colon = line.find(':');
            if (colon == std::string::npos) throw fail("expected 'NAME: key=value ...'");
            Logic l;
            l.name = strip(line.substr(0, colon));
            l.rule_mp = false;
            std::istringstream rest(line.substr(colon + 1));
            std::string kv;
            while (rest >> kv) {
                std::size_t eq = kv.find('=');
                if (eq == std::string::npos) throw fail("expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
                if (key == "rules") {
                    for (const auto& rule : split(value, ',')) {
                        if (rule == "MP")
                            l.rule_mp = true;
                        else if (rule == "Narr")
                            l.rule_nec = true;
                        else
                            throw fail("unknown rule '" + rule + "'");
                    }
                } else if (key == "schemes") {
                    for (const auto& s : split(value, ',')) {
                        if (s == "IPC") {
                            for (const auto& n : ipc_scheme_names()) l.schemes.push_back(n);
                        } else if (!s.empty()) {
                            if (!r.find_scheme(s)) throw fail("unknown scheme '" + s + "'");
                            l.schemes.push_back(s);
                        }
                    }
                } else if (key == "class") {
                    if (value == "-")
                        l.semantic_class = std::nullopt;
                    else if (value == "all")
                        l.semantic_class = std::set<ConditionId>{};
                    else {
                        std::set<ConditionId> cs;
                        for (const auto& c : split(value, ','))
                            if (!c.empty()) cs.insert(condition_from_name(c));
                        l.semantic_class = std::move(cs);
                    }
                } else {
                    throw fail("unknown key '" + key + "'");
                }
            }
            if (!l.rule_mp) throw fail("logic '" + l.name + "' must include rule MP");
            r.add_logic(std::move(l));
        }
    }
    return r;
}

Registry Registry::load_from_dir(const std::string& data_dir) {
    namespace fs = std::filesystem;
    return load((fs::path(data_dir) / "schemes.txt").string(),
                (fs::path(data_dir) / "logics.txt").string());
}

const Scheme* Registry::find_scheme(const std::string& name) const {
    auto it = scheme_index_.find(name);
    return it == scheme_index_.end() ? nullptr : &schemes_[it->second];
}

const Scheme& Registry::scheme(const std::string& name) const {
    if (const Scheme* s = find_scheme(name)) return *s;
    throw RegistryError("unknown scheme '" + name + "'");
}

const Logic* Registry::find_logic(const std::string& name) const {
    auto it = logic_index_.find(name);
    return it == logic_index_.end() ? nullptr : &logics_[it->second];
}

const Logic& Registry::logic(const std::string& name) const {
    if (const Logic* l = find_logic(name)) return *l;
    throw RegistryError("unknown logic '" + name + "'");
}

void Registry::add_scheme(Scheme s) {
    if (scheme_index_.count(s.name)) throw RegistryError("duplicate scheme '" + s.name + "'");
    scheme_index_[s.name] = schemes_.size();
    schemes_.push_back(std::move(s));
}

void Registry::add_logic(Logic l) {
    if (logic_index_.count(l.name)) throw RegistryError("duplicate logic '" + l.name + "'");
    logic_index_[l.name] = logics_.size();
    logics_.push_back(std::move(l));
}

Fm Registry::fresh_instance(const std::string& scheme_name) const {
    const Scheme& s = scheme(scheme_name);
    static const char* pool[] = {"p", "q", "r", "s", "u", "v", "w", "x"};
    std::map<std::string, Fm> binding;
    std::size_t i = 0;
    for (const auto& mv : metavars(s.tmpl)) {
        if (i >= std::size(pool)) throw RegistryError("scheme has too many metavariables");
        binding[mv] = atom(pool[i++]);
    }
    return substitute(s.tmpl, binding);
}

namespace {

std::string locate_dir(const char* env_var, const char* local_name) {
    namespace fs = std::filesystem;
    if (const char* env = std::getenv(env_var)) return env;
    if (fs::exists(fs::path(local_name))) return local_name;
    fs::path from_source = fs::path(LEWISKIT_SOURCE_DIR) / local_name;
    if (!std::string(LEWISKIT_SOURCE_DIR).empty() && fs::exists(from_source))
        return from_source.string();
    return local_name;
}

}  // namespace

std::string default_data_dir() { return locate_dir("LEWISKIT_DATA", "data"); }

std::string default_fixtures_dir() { return locate_dir("LEWISKIT_FIXTURES", "fixtures"); }

Fm v_instance(const std::vector<Fm>& chi_conjuncts, Fm phi_n, Fm phi_n1) {
    std::vector<Fm> ante;  // phi_0 .. phi_{n-1}: the conjuncts' antecedents
    for (Fm c : chi_conjuncts) {
        c = normalize(c);
        if (c->conn() != Conn::Imp)
            throw RegistryError("conjunct is not an implication: " + print(c));
        ante.push_back(c->left());
    }
    Fm chi = nullptr;
    for (Fm c : chi_conjuncts)
        chi = chi ? mk_and(chi, normalize(c)) : normalize(c);
    if (!chi) chi = top();  // empty conjunction
    ante.push_back(normalize(phi_n));
    ante.push_back(normalize(phi_n1));
    Fm disj = nullptr;
    for (Fm a : ante) {
        Fm piece = chi_translate(chi, a);
        disj = disj ? mk_or(disj, piece) : piece;
    }
    Fm head = mk_imp(chi, mk_or(ante[ante.size() - 2], ante.back()));
    return mk_strictif(head, disj);
}

}  // namespace lewiskit
