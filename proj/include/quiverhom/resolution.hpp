#pragma once

#include "quiverhom/constructions.hpp"
#include "quiverhom/extnat.hpp"

namespace quiverhom {

// Minimal projective resolution ... -> P_1 -> P_0 -> M -> 0, truncated at
// `cap` terms unless the kernel dies first.
struct ProjectiveResolution {
    QuiverModule module;
    std::vector<StructuredProjective> terms;
    std::vector<ModuleMap> maps; // maps[k]: terms[k].mod -> terms[k-1].mod, k >= 1
    ModuleMap augmentation;      // terms[0].mod -> module
    bool complete = false;       // the chain ended within the cap

    int length() const { return int(terms.size()) - 1; } // index of last term
};

ProjectiveResolution min_projective_resolution(const QuiverModule& m, int cap);

// Minimal injective coresolution 0 -> M -> I^0 -> I^1 -> ..., obtained by
// dualizing the projective resolution of D(M) over the opposite algebra.
struct InjectiveCoresolution {
    QuiverModule module;
    std::vector<QuiverModule> terms;        // I^k
    std::vector<std::vector<int>> copies;   // I^k = direct sum of I(j), j in copies[k]
    std::vector<ModuleMap> maps;            // maps[k]: I^{k-1} -> I^k, k >= 1
    ModuleMap coaugmentation;               // M -> I^0
    bool complete = false;

    int length() const { return int(terms.size()) - 1; }
};

InjectiveCoresolution min_injective_coresolution(const QuiverModule& m, int cap);

// The generic chain type named by the CLI: projective or injective, with the
// vertex multiset of each term.
struct ResolutionChain {
    enum class Kind { Projective, Injective };
    Kind kind;
    std::vector<std::vector<int>> term_copies;
    std::vector<std::vector<int>> term_dims;
    bool complete;
    int length() const { return int(term_copies.size()) - 1; }
};
ResolutionChain chain_of(const ProjectiveResolution& r);
ResolutionChain chain_of(const InjectiveCoresolution& r);

ExtendedNat pdim(const QuiverModule& m, int cap);
ExtendedNat idim(const QuiverModule& m, int cap);
ExtendedNat domdim(const QuiverModule& m, int cap);
ExtendedNat codomdim(const QuiverModule& m, int cap);
ExtendedNat gldim(const AlgebraPtr& a, int cap);
ExtendedNat algebra_domdim(const AlgebraPtr& a, int cap);

// dim Ext^k(m, n), via the minimal projective resolution of m.
int ext_dim(const QuiverModule& m, const QuiverModule& n, int k);
// Independent route through the injective coresolution of n (test oracle).
int ext_dim_via_coresolution(const QuiverModule& m, const QuiverModule& n, int k);

// dim Ext^k(m, n) for all 0 <= k <= kmax in one pass.
std::vector<int> ext_dims_upto(const QuiverModule& m, const QuiverModule& n, int kmax);

} // namespace quiverhom
