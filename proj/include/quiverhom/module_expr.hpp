#pragma once

#include "quiverhom/translate.hpp"

namespace quiverhom {

// Module expressions accepted wherever the CLI expects a module:
//   P(i), I(i), S(i)    indexed by vertex label or 1-based position
//   A, DA               regular module, its dual
//   stableA, costableA  A/AfA and A/AeA
//   module { v1: 2, v2: 1 ; arrow a: [[0,1],[1,0]] ; ... }
// Literal matrices are row-major over the algebra's field, entries are
// integers or fractions; omitted vertices and arrows are zero.
QuiverModule parse_module_expr(const AlgebraPtr& a, const std::string& text, int cap = 33);

// Resolves a vertex token: label first, then 1-based index.
int resolve_vertex(const BoundQuiverAlgebra& a, const std::string& token);

} // namespace quiverhom
