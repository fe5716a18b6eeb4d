#pragma once

#include "quiverhom/module.hpp"

#include <optional>

namespace quiverhom {

struct IsoInconclusiveError : QhError {
    unsigned long long seed;
    explicit IsoInconclusiveError(unsigned long long s)
        : QhError("isomorphism test inconclusive after budget; replay with seed " +
                  std::to_string(s)),
          seed(s) {}
};

struct DecompositionInconclusiveError : QhError {
    unsigned long long seed;
    explicit DecompositionInconclusiveError(unsigned long long s)
        : QhError("decomposition inconclusive after budget; replay with seed " +
                  std::to_string(s)),
          seed(s) {}
};

// Direct sum of indecomposable projectives P(v), one copy per entry of
// `copies`, with the concatenated path basis laid out per copy and vertex.
struct StructuredProjective {
    std::vector<int> copies;
    QuiverModule mod;
    // block_offset[c][v]: first row of copy c inside mod's vertex-v space;
    // block_paths[c][v]: algebra basis ids of the copy's paths at vertex v.
    std::vector<std::vector<int>> block_offset;
    std::vector<std::vector<std::vector<int>>> block_paths;

    int copy_count() const { return int(copies.size()); }
    // Row index of the generator e_{copies[c]} inside vertex copies[c].
    int generator_row(int c) const { return block_offset[c][copies[c]]; }
    bool is_injective_term(const std::vector<bool>& proj_inj_flags) const;
};

StructuredProjective structured_projective(const AlgebraPtr& a, const std::vector<int>& copies);

QuiverModule projective(const AlgebraPtr& a, int vertex);
QuiverModule injective(const AlgebraPtr& a, int vertex);
QuiverModule simple(const AlgebraPtr& a, int vertex);
QuiverModule regular(const AlgebraPtr& a);
// D(A) as a right A-module.
QuiverModule coregular(const AlgebraPtr& a);

struct ProjectiveCover {
    StructuredProjective cover;
    ModuleMap onto; // cover.mod -> m, surjective
};
struct InjectiveHull {
    std::vector<int> copies; // socle vertices: hull = direct sum of I(j)
    QuiverModule hull;
    ModuleMap into; // m -> hull, injective
};

ProjectiveCover projective_cover(const QuiverModule& m);
InjectiveHull injective_hull(const QuiverModule& m);

QuiverModule syzygy(const QuiverModule& m);
QuiverModule cosyzygy(const QuiverModule& m);

bool is_projective(const QuiverModule& m);
bool is_injective(const QuiverModule& m);
bool is_projective_injective(const QuiverModule& m);

// Per-algebra flags: P(i) injective / I(j) projective, by vertex.
struct ProjInjFlags {
    std::vector<bool> projective_is_injective;
    std::vector<bool> injective_is_projective;
};
ProjInjFlags proj_inj_flags(const AlgebraPtr& a);

bool is_isomorphic(const QuiverModule& m, const QuiverModule& n, unsigned long long seed);

struct DecompositionPart {
    QuiverModule summand;
    int multiplicity;
};
std::vector<DecompositionPart> decompose(const QuiverModule& m, unsigned long long seed);

} // namespace quiverhom
