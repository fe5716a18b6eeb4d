#pragma once

#include "quiverhom/matrix.hpp"
#include "quiverhom/quiver.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace quiverhom {

struct NotAdmissibleError : QhError {
    int length_cap;
    explicit NotAdmissibleError(int cap)
        : QhError("paths of length " + std::to_string(cap) +
                  " still survive; ideal not admissible at this cap"),
          length_cap(cap) {}
};

struct InvalidKupischError : QhError {
    using QhError::QhError;
};

struct KupischSeries {
    enum class Kind { Linear, Cyclic };
    Kind kind = Kind::Linear;
    std::vector<int> entries;

    int size() const { return int(entries.size()); }
    void validate() const; // throws InvalidKupischError naming the violated inequality
    std::string to_string() const;
    bool operator==(const KupischSeries&) const = default;
};

struct BasisPath {
    int src = 0;
    int tgt = 0;
    std::vector<int> arrows; // empty for trivial paths
    int length() const { return int(arrows.size()); }
};

// Sparse algebra element: (basis id, coefficient) pairs sorted by id.
using AlgElem = std::vector<std::pair<int, Scalar>>;

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

// K Q / I with a normal-form path basis. Immutable after construction.
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra> {
public:
    static AlgebraPtr build(Quiver q, std::vector<Relation> rels, Field field,
                            int length_cap = 64);
    static AlgebraPtr nakayama(const KupischSeries& k, Field field);

    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int vertex_count() const { return quiver_.vertex_count(); }
    int arrow_count() const { return quiver_.arrow_count(); }
    int dim() const { return int(basis_.size()); }
    // J^L = 0; least such L (1 for semisimple algebras).
    int nilpotency() const { return nilpotency_; }
    bool quiver_connected() const { return connected_; }

    const std::vector<BasisPath>& basis() const { return basis_; }
    const BasisPath& basis_path(int id) const { return basis_[id]; }
    int trivial_path(int vertex) const { return vertex; } // ids 0..n-1
    // Basis id of the length-1 path of an arrow (arrows always survive in an
    // admissible quotient, but their basis order follows source vertices).
    int arrow_basis_id(int arrow) const { return arrow_ids_[arrow]; }
    // Basis ids with the given source (ordered by id; trivial path first).
    const std::vector<int>& paths_from(int vertex) const { return paths_from_[vertex]; }
    // Basis ids of paths i -> j; dim e_i A e_j.
    const std::vector<int>& paths_from_to(int i, int j) const {
        return paths_from_to_[size_t(i) * vertex_count() + j];
    }
    // dim Hom(e_i A, e_j A) = dim e_j A e_i, the span of paths j -> i under
    // left-to-right composition. Cross-checked against the intertwiner solver
    // in the test suite.
    int hom_between_projectives_dim(int i, int j) const {
        return int(paths_from_to(j, i).size());
    }

    // Product of basis element b with arrow a, in normal form. Empty when the
    // product is zero or not composable.
    const AlgElem& right_mult_arrow(int b, int a) const {
        return right_mult_[size_t(b) * arrow_count() + a];
    }
    AlgElem product_basis(int b, int c) const;
    AlgElem product(const AlgElem& x, const AlgElem& y) const;
    AlgElem reduce_term(const Scalar& coef, const std::vector<int>& arrows) const;
    AlgElem reduce_relation(const Relation& r) const;

    AlgebraPtr opposite() const; // cached; opposite()->opposite() is this algebra

    const std::optional<KupischSeries>& kupisch() const { return kupisch_; }

    struct NakayamaChain {
        KupischSeries::Kind kind;
        std::vector<int> order; // vertex ids along the chain / cycle
        std::vector<int> c;     // c[k] = dim e_{order[k]} A
    };
    // Present when the quiver is a linear chain or a single oriented cycle.
    std::optional<NakayamaChain> nakayama_chain() const;

private:
    BoundQuiverAlgebra() = default;
    void construct(int length_cap);
    AlgebraPtr make_opposite() const;

    Quiver quiver_;
    Field field_ = Field::rationals();
    std::vector<Relation> relations_;
    std::vector<BasisPath> basis_;
    std::vector<std::vector<int>> paths_from_;
    std::vector<std::vector<int>> paths_from_to_;
    std::vector<AlgElem> right_mult_;
    std::vector<int> arrow_ids_;
    int nilpotency_ = 1;
    bool connected_ = true;
    std::optional<KupischSeries> kupisch_;

    mutable std::mutex op_mutex_;
    mutable AlgebraPtr op_strong_;
    mutable std::weak_ptr<const BoundQuiverAlgebra> op_weak_;
};

void add_scaled(AlgElem& dst, const AlgElem& src, const Scalar& coef, const Field& f);

} // namespace quiverhom
