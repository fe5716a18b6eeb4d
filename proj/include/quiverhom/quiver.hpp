#pragma once

#include "quiverhom/field.hpp"

#include <string>
#include <vector>

namespace quiverhom {

struct Arrow {
    std::string label;
    int src = 0;
    int tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertex_labels;
    std::vector<Arrow> arrows;

    int vertex_count() const { return int(vertex_labels.size()); }
    int arrow_count() const { return int(arrows.size()); }
    int vertex_index(const std::string& label) const; // -1 when absent
    int arrow_index(const std::string& label) const;  // -1 when absent
    bool connected() const; // as an undirected graph
    void validate() const;  // unique labels, endpoints in range
};

// Paths are arrow index sequences, composed left to right: {a, b} is
// "traverse a, then b", so tgt(a) == src(b).
struct RelationTerm {
    Scalar coef;
    std::vector<int> arrows;
};

struct Relation {
    std::vector<RelationTerm> terms;

    int source(const Quiver& q) const { return q.arrows[terms.front().arrows.front()].src; }
    int target(const Quiver& q) const { return q.arrows[terms.front().arrows.back()].tgt; }
    size_t length() const { return terms.front().arrows.size(); }
    // Parallel terms, every term length >= 2 and equal length, some nonzero
    // coefficient. Equal length is required by the degree-by-degree ideal
    // closure; inhomogeneous admissible ideals are out of scope.
    void validate(const Quiver& q, const Field& f) const;
};

} // namespace quiverhom
