#include "lewiskit/proof.hpp"

#include <fstream>
#include <sstream>

#include "lewiskit/parser.hpp"
#include "lewiskit/print.hpp"

namespace lewiskit {

CheckResult check_proof(const Registry& reg, const std::string& logic_name, Proof& proof) {
    auto reject = [](std::string reason, int step) {
        return CheckResult{false, std::move(reason), step};
    };
    const Logic* logic = reg.find_logic(logic_name);
    if (!logic) return reject("unknown logic '" + logic_name + "'", -1);
    if (!proof.goal) return reject("proof has no goal", -1);
    if (proof.steps.empty()) return reject("proof has no steps", -1);

    for (std::size_t s = 0; s < proof.steps.size(); ++s) {
        ProofStep& st = proof.steps[s];
        const int human = static_cast<int>(s) + 1;
        switch (st.kind) {
            case ProofStep::Kind::Ax: {
                const Scheme* sch = reg.find_scheme(st.scheme);
                if (!sch) return reject("unknown scheme '" + st.scheme + "'", human);
                if (!logic->has_scheme(st.scheme))
                    return reject("scheme '" + st.scheme + "' is not part of logic '" +
                                      logic->name + "'",
                                  human);
                auto mvs = metavars(sch->tmpl);
                for (const auto& [name, value] : st.binding)
                    if (!mvs.count(name))
                        return reject("substitution mismatch: scheme '" + st.scheme +
                                          "' has no metavariable ?" + name,
                                      human);
                std::map<std::string, Fm> normalized;
                for (const auto& [name, value] : st.binding) {
                    if (has_metavars(value))
                        return reject("substitution mismatch: binding for ?" + name +
                                          " contains metavariables",
                                      human);
                    normalized[name] = normalize(value);
                }
                try {
                    st.conclusion = substitute(sch->tmpl, normalized);
                } catch (const SubstError& e) {
                    return reject(std::string("substitution mismatch: ") + e.what(), human);
                }
                break;
            }
            case ProofStep::Kind::Mp: {
                if (st.i < 1 || st.i >= human || st.j < 1 || st.j >= human)
                    return reject("dangling premise index in mp", human);
                Fm ante = proof.steps[st.i - 1].conclusion;
                Fm impl = proof.steps[st.j - 1].conclusion;
                if (impl->conn() != Conn::Imp || impl->left() != ante)
                    return reject("MP shape mismatch: step " + std::to_string(st.j) +
                                      " is not an implication whose antecedent is step " +
                                      std::to_string(st.i),
                                  human);
                st.conclusion = impl->right();
                break;
            }
            case ProofStep::Kind::Nec: {
                if (!logic->rule_nec)
                    return reject("logic '" + logic->name + "' has no necessitation rule", human);
                if (st.i < 1 || st.i >= human)
                    return reject("dangling premise index in nec", human);
                Fm prem = proof.steps[st.i - 1].conclusion;
                if (prem->conn() != Conn::Imp)
                    return reject("necessitation applied to a non-implication", human);
                st.conclusion = mk_strictif(prem->left(), prem->right());
                break;
            }
        }
    }
    Fm last = proof.steps.back().conclusion;
    if (last != normalize(proof.goal))
        return reject("final conclusion " + print(last) + " does not match goal " +
                          print(normalize(proof.goal)),
                      static_cast<int>(proof.steps.size()));
    return CheckResult{true, "", -1};
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::map<std::string, Fm> parse_binding(const std::string& text, int lineno) {
    auto fail = [&](const std::string& msg) {
        return ProofFileError("line " + std::to_string(lineno) + ": " + msg);
    };
    std::string body = strip(text);
    if (body.empty() || body.front() != '{' || body.back() != '}')
        throw fail("expected binding of the form {?name=formula, ...}");
    body = body.substr(1, body.size() - 2);
    std::map<std::string, Fm> binding;
    // formulas contain no commas, so a flat split is safe
    for (const auto& piece_raw : [&] {
             std::vector<std::string> pieces;
             std::string cur;
             for (char c : body) {
                 if (c == ',') {
                     pieces.push_back(cur);
                     cur.clear();
                 } else
                     cur.push_back(c);
             }
             pieces.push_back(cur);
             return pieces;
         }()) {
        std::string piece = strip(piece_raw);
        if (piece.empty()) continue;
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos) throw fail("expected ?name=formula in binding");
        std::string name = strip(piece.substr(0, eq));
        if (!name.empty() && name[0] == '?') name = name.substr(1);
        if (name.empty()) throw fail("empty metavariable name in binding");
        try {
            binding[name] = normalize(parse(piece.substr(eq + 1)));
        } catch (const ParseError& e) {
            throw fail(std::string("bad formula for ?") + name + ": " + e.what());
        }
    }
    return binding;
}

}  // namespace

Proof read_proof(std::istream& in) {
    Proof proof;
    std::string line;
    int lineno = 0;
    int next_step = 1;
    while (std::getline(in, line)) {
        ++lineno;
        auto fail = [&](const std::string& msg) {
            return ProofFileError("line " + std::to_string(lineno) + ": " + msg);
        };
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("logic:", 0) == 0) {
            proof.logic = strip(s.substr(6));
            continue;
        }
        if (s.rfind("goal:", 0) == 0) {
            if (proof.goal) throw fail("duplicate goal line");
            try {
                proof.goal = normalize(parse(s.substr(5)));
            } catch (const ParseError& e) {
                throw fail(std::string("bad goal formula: ") + e.what());
            }
            continue;
        }
        // "K. kind ..." — step lines
        std::size_t dot = s.find('.');
        if (dot == std::string::npos) throw fail("expected 'N. ax|mp|nec ...'");
        int num = 0;
        try {
            num = std::stoi(s.substr(0, dot));
        } catch (...) {
            throw fail("bad step number");
        }
        if (num != next_step)
            throw fail("steps must be numbered consecutively; expected " +
                       std::to_string(next_step));
        ++next_step;
        std::istringstream rest(s.substr(dot + 1));
        std::string kind;
        rest >> kind;
        ProofStep st;
        if (kind == "ax") {
            st.kind = ProofStep::Kind::Ax;
            rest >> st.scheme;
            if (st.scheme.empty()) throw fail("ax step missing scheme name");
            std::string remainder;
            std::getline(rest, remainder);
            remainder = strip(remainder);
            if (!remainder.empty()) st.binding = parse_binding(remainder, lineno);
        } else if (kind == "mp") {
            st.kind = ProofStep::Kind::Mp;
            if (!(rest >> st.i >> st.j)) throw fail("mp step needs two premise numbers");
        } else if (kind == "nec") {
            st.kind = ProofStep::Kind::Nec;
            if (!(rest >> st.i)) throw fail("nec step needs a premise number");
        } else {
            throw fail("unknown step kind '" + kind + "'");
        }
        proof.steps.push_back(std::move(st));
    }
    if (!proof.goal) throw ProofFileError("proof file has no goal line");
    return proof;
}

Proof read_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ProofFileError("cannot open proof file: " + path);
    try {
        return read_proof(in);
    } catch (const ProofFileError& e) {
        throw ProofFileError(path + ": " + e.what());
    }
}

std::string write_proof(const Proof& proof) {
    std::ostringstream os;
    if (!proof.logic.empty()) os << "logic: " << proof.logic << "\n";
    os << "goal: " << print(proof.goal) << "\n";
    for (std::size_t s = 0; s < proof.steps.size(); ++s) {
        const ProofStep& st = proof.steps[s];
        os << (s + 1) << ". ";
        switch (st.kind) {
            case ProofStep::Kind::Ax: {
                os << "ax " << st.scheme;
                if (!st.binding.empty()) {
                    os << " {";
                    bool first = true;
                    for (const auto& [name, value] : st.binding) {
                        if (!first) os << ", ";
                        first = false;
                        os << '?' << name << '=' << print(value);
                    }
                    os << '}';
                }
                break;
            }
            case ProofStep::Kind::Mp:
                os << "mp " << st.i << ' ' << st.j;
                break;
            case ProofStep::Kind::Nec:
                os << "nec " << st.i;
                break;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace lewiskit
