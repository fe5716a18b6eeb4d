#pragma once

#include "quiverhom/algebra.hpp"

#include <span>

namespace quiverhom {

struct AlgebraMismatchError : QhError {
    AlgebraMismatchError() : QhError("modules live over different algebras") {}
};

// Right A-module as a quiver representation: per-vertex spaces and one
// matrix per arrow acting on row vectors, m . a = m * rho_a.
class QuiverModule {
public:
    QuiverModule() = default;
    QuiverModule(AlgebraPtr a, std::vector<int> dims, std::vector<Matrix> action);
    static QuiverModule zero(AlgebraPtr a);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& action(int arrow) const { return action_[arrow]; }

    RowVec apply_arrow(int arrow, const RowVec& x) const;
    // Right action of a path (arrow index sequence) on x at `vertex`.
    RowVec apply_path(int vertex, const RowVec& x, std::span<const int> arrows) const;
    // dims[src] x dims[tgt] matrix of the path action.
    Matrix path_matrix(int vertex, std::span<const int> arrows) const;

    // Every algebra relation acts as zero.
    void validate() const;

    bool operator==(const QuiverModule&) const = default;

private:
    AlgebraPtr algebra_;
    std::vector<int> dims_;
    std::vector<Matrix> action_;
};

QuiverModule direct_sum(const std::vector<QuiverModule>& parts);

struct ModuleMap {
    QuiverModule source;
    QuiverModule target;
    std::vector<Matrix> comps; // per vertex, dims_src[v] x dims_tgt[v]

    void validate() const; // intertwining with every arrow
    ModuleMap then(const ModuleMap& g) const;
    bool is_zero() const;
    int rank(int v) const;
    bool is_injective_map() const;
    bool is_surjective_map() const;
    bool is_isomorphism() const;
};

ModuleMap zero_map(const QuiverModule& src, const QuiverModule& tgt);
ModuleMap identity_map(const QuiverModule& m);
// Dual of f: X -> Y is D(Y) -> D(X) over the opposite algebra.
ModuleMap dual_map(const ModuleMap& f);

// Submodule of `ambient`: canonical row spans per vertex, the abstract module
// in span coordinates, and the inclusion.
struct Submodule {
    std::vector<RowSpan> spans;
    QuiverModule module;
    ModuleMap inclusion; // module -> ambient
    int total_dim() const { return module.total_dim(); }
};

struct QuotientModule {
    QuiverModule module;
    ModuleMap projection; // ambient -> module
};

// Smallest submodule containing the given per-vertex vectors.
Submodule submodule_generated(const QuiverModule& m, const std::vector<std::vector<RowVec>>& gens);
Submodule submodule_from_spans(const QuiverModule& m, std::vector<RowSpan> spans);
QuotientModule quotient_by(const QuiverModule& m, const std::vector<RowSpan>& spans);

std::vector<ModuleMap> hom_basis(const QuiverModule& m, const QuiverModule& n);
int hom_dim(const QuiverModule& m, const QuiverModule& n);

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);
// The epi part of f = (source ->> image) . inclusion.
ModuleMap image_factorization(const ModuleMap& f, const Submodule& im);
QuotientModule cokernel(const ModuleMap& f);

Submodule radical(const QuiverModule& m);
Submodule socle(const QuiverModule& m);
QuotientModule top(const QuiverModule& m);

// Per-vertex multiplicities of the simple S(v) in a semisimple quotient or
// submodule (used for tops and socles).
std::vector<int> top_multiplicities(const QuiverModule& m);
std::vector<int> socle_multiplicities(const QuiverModule& m);

Submodule trace(const QuiverModule& m, const QuiverModule& n);
bool gen_membership(const QuiverModule& x, const QuiverModule& m);
bool cogen_membership(const QuiverModule& x, const QuiverModule& m);

// Standard duality mod-A <-> mod-A^op; dual(dual(m)) == m on the nose.
QuiverModule dual(const QuiverModule& m);

} // namespace quiverhom
