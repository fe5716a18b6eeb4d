#pragma once

#include "quiverhom/resolution.hpp"

namespace quiverhom {

// Transpose Tr(m) over the opposite algebra, from a minimal projective
// presentation P_1 -> P_0 -> m -> 0. Projective summands of m die in Tr.
QuiverModule transpose(const QuiverModule& m);

// tau = D Tr and its inverse Tr D; tau of a projective is zero.
QuiverModule tau(const QuiverModule& m);
QuiverModule tau_inverse(const QuiverModule& m);

// Higher translates tau_n = tau . syzygy^{n-1}, tau_n^{-1} = tau^{-1} . cosyzygy^{n-1}.
QuiverModule tau_n(const QuiverModule& m, int n);
QuiverModule tau_n_inverse(const QuiverModule& m, int n);

// Nakayama functor nu = D Hom(-, A) and its inverse.
QuiverModule nakayama_functor(const QuiverModule& m);
QuiverModule nakayama_functor_inverse(const QuiverModule& m);

// Idempotent supports: vertices whose projective is injective on the stated
// side. `left` refers to the left modules A e_i, computed over the opposite.
std::vector<int> projective_injective_vertices_right(const AlgebraPtr& a);
std::vector<int> projective_injective_vertices_left(const AlgebraPtr& a);

// Stable module A/AfA and costable module A/AeA, with add(Af) resp. add(eA)
// the projective-injective left resp. right modules. When the idempotent is
// zero the result is the regular module.
QuiverModule stable_module(const AlgebraPtr& a, int cap = 33);
QuiverModule costable_module(const AlgebraPtr& a, int cap = 33);

} // namespace quiverhom
