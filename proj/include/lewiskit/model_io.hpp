#pragma once

#include <iosfwd>
#include <string>

#include "lewiskit/kripke.hpp"

namespace lewiskit {

// Line-based model files:
//   worlds N
//   names a b c ...        (optional; world tokens elsewhere are names or indices)
//   order a b              (order generators; closure is computed)
//   modal a b
//   val p: w1 w2 ...
// Blank lines and lines starting with '#' are ignored.
struct ModelFile {
    Preframe preframe;
    std::map<std::string, Mask> valuation;

    Frame frame() const { return Frame(preframe); }           // throws if not a frame
    Model model() const { return Model(frame(), valuation); }
};

ModelFile read_model(std::istream& in);
ModelFile read_model_file(const std::string& path);

std::string write_model(const Preframe& p, const std::map<std::string, Mask>& valuation);

// Graphviz export: order edges solid (transitive reduction only), modal edges
// dashed with label "<". With a valuation, true atoms join the world label.
std::string to_dot(const Preframe& p, const std::map<std::string, Mask>& valuation = {});

}  // namespace lewiskit
