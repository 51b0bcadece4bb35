#pragma once

#include <string>

#include "lewiskit/formula.hpp"

namespace lewiskit {

// Renders a formula in the ASCII surface syntax with minimal parentheses:
// #f, #t, ~x, []x, /\, \/, ->, ~>. Negations Imp(x, #f) and boxed forms
// Strictif(#t, x) print as ~x and []x; both re-parse to the same normalized
// tree, so parse(print(f)) == f holds for normalized f.
std::string print(Fm f);

}  // namespace lewiskit
