#include "lewiskit/model_io.hpp"

#include <fstream>
#include <sstream>

namespace lewiskit {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

ModelFile read_model(std::istream& in) {
    int n = -1;
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> order, modal;
    std::vector<std::pair<std::string, std::vector<std::string>>> vals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        std::string stripped = line;
        if (auto hash = stripped.find('#'); hash != std::string::npos) stripped.resize(hash);
        auto toks = split_ws(stripped);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "worlds") {
            if (toks.size() != 2 || n != -1)
                throw ModelError("malformed or repeated 'worlds' line" + where());
            n = std::stoi(toks[1]);
        } else if (head == "names") {
            names.assign(toks.begin() + 1, toks.end());
        } else if (head == "order" || head == "modal") {
            if (toks.size() != 3) throw ModelError("expected '" + head + " a b'" + where());
            (head == "order" ? order : modal).emplace_back(toks[1], toks[2]);
        } else if (head == "val") {
            // "val p: w1 w2 ..." — tolerate the colon glued to the atom or free-standing
            if (toks.size() < 2) throw ModelError("expected 'val p: worlds...'" + where());
            std::string atom_name = toks[1];
            std::size_t rest = 2;
            if (!atom_name.empty() && atom_name.back() == ':')
                atom_name.pop_back();
            else if (toks.size() > 2 && toks[2] == ":")
                rest = 3;
            else
                throw ModelError("expected ':' after atom in val line" + where());
            vals.emplace_back(atom_name, std::vector<std::string>(toks.begin() + rest, toks.end()));
        } else {
            throw ModelError("unknown directive '" + head + "'" + where());
        }
    }
    if (n < 0) throw ModelError("model file missing 'worlds' line");

    // Resolve world tokens against the declared names (or indices) by building
    // a name-only preframe first.
    Preframe lookup = build_preframe(n, {}, {}, names);
    auto resolve = [&](const std::string& tok) { return lookup.index_of(tok); };
    std::vector<std::pair<int, int>> order_ix, modal_ix;
    for (auto& [a, b] : order) order_ix.emplace_back(resolve(a), resolve(b));
    for (auto& [a, b] : modal) modal_ix.emplace_back(resolve(a), resolve(b));

    ModelFile mf;
    mf.preframe = build_preframe(n, order_ix, modal_ix, lookup.names);
    for (auto& [atom_name, worlds] : vals) {
        Mask m = 0;
        for (auto& w : worlds) m |= bit(resolve(w));
        mf.valuation[atom_name] |= m;
    }
    return mf;
}

ModelFile read_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file: " + path);
    return read_model(in);
}

namespace {

// k -> l is in the transitive reduction of the strict order iff nothing sits
// properly between them; for partial orders the reduction is unique.
bool covering(const Preframe& p, int k, int l) {
    if (k == l || !p.le_rel(k, l)) return false;
    for (int m = 0; m < p.n; ++m)
        if (m != k && m != l && p.le_rel(k, m) && p.le_rel(m, l)) return false;
    return true;
}

bool default_names(const Preframe& p) {
    for (int w = 0; w < p.n; ++w)
        if (p.names[w] != std::to_string(w)) return false;
    return true;
}

}  // namespace

std::string write_model(const Preframe& p, const std::map<std::string, Mask>& valuation) {
    std::ostringstream os;
    os << "worlds " << p.n << "\n";
    if (!default_names(p)) {
        os << "names";
        for (int w = 0; w < p.n; ++w) os << ' ' << p.names[w];
        os << "\n";
    }
    for (int k = 0; k < p.n; ++k)
        for (int l = 0; l < p.n; ++l)
            if (covering(p, k, l)) os << "order " << p.names[k] << ' ' << p.names[l] << "\n";
    for (int k = 0; k < p.n; ++k)
        for (int l = 0; l < p.n; ++l)
            if (p.lt_rel(k, l)) os << "modal " << p.names[k] << ' ' << p.names[l] << "\n";
    for (const auto& [atom_name, m] : valuation) {
        os << "val " << atom_name << ':';
        for (int w = 0; w < p.n; ++w)
            if (m & bit(w)) os << ' ' << p.names[w];
        os << "\n";
    }
    return os.str();
}

std::string to_dot(const Preframe& p, const std::map<std::string, Mask>& valuation) {
    std::ostringstream os;
    os << "digraph kripke {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int w = 0; w < p.n; ++w) {
        os << "  \"" << p.names[w] << '"';
        std::string truths;
        for (const auto& [atom_name, m] : valuation)
            if (m & bit(w)) truths += (truths.empty() ? "" : " ") + atom_name;
        if (!truths.empty())
            os << " [label=\"" << p.names[w] << "\\n" << truths << "\"]";
        os << ";\n";
    }
    for (int k = 0; k < p.n; ++k)
        for (int l = 0; l < p.n; ++l)
            if (covering(p, k, l))
                os << "  \"" << p.names[k] << "\" -> \"" << p.names[l] << "\";\n";
    for (int k = 0; k < p.n; ++k)
        for (int l = 0; l < p.n; ++l)
            if (p.lt_rel(k, l))
                os << "  \"" << p.names[k] << "\" -> \"" << p.names[l]
                   << "\" [style=dashed, label=\"<\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace lewiskit
