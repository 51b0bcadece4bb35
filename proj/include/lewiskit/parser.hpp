#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lewiskit/formula.hpp"

namespace lewiskit {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Parses the ASCII surface syntax:
//   #f #t  atoms  ?metavars  ~x  []x  /\  \/  ->  ~>  ( )
// Precedence, loosest first: ->, \/, /\, ~>, unary. -> associates right,
// \/ and /\ left; ~> is non-associative, chains need explicit parentheses.
// The returned tree may contain Box nodes; callers that need the core
// language apply normalize().
Fm parse(std::string_view text);

// parse followed by normalize; the form nearly every caller wants.
Fm parse_normalized(std::string_view text);

}  // namespace lewiskit
