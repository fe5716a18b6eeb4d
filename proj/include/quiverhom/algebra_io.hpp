#pragma once

#include "quiverhom/algebra.hpp"

#include <iosfwd>
#include <string>

namespace quiverhom {

struct ParseError : QhError {
    int line;
    ParseError(int line_, const std::string& msg)
        : QhError("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct ParsedAlgebra {
    AlgebraPtr algebra;
    std::vector<std::string> warnings;
};

// Algebra description text format:
//   field GF(3) | field Q
//   vertices v1 v2 ...
//   arrow <name> : <src> -> <tgt>
//   relation <coef>*<path> [+ <coef>*<path> ...]   path = arrow*arrow*...
//   nakayama linear|cyclic c1,c2,...,cn            (alternative to the above)
// Whitespace-insensitive; '#' starts a comment.
ParsedAlgebra parse_algebra_text(const std::string& text, int length_cap = 64);
ParsedAlgebra parse_algebra_file(const std::string& path, int length_cap = 64);

std::string serialize_algebra(const BoundQuiverAlgebra& a);

} // namespace quiverhom
