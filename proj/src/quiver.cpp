#include "quiverhom/quiver.hpp"

#include <set>

namespace quiverhom {

int Quiver::vertex_index(const std::string& label) const {
    for (size_t i = 0; i < vertex_labels.size(); ++i)
        if (vertex_labels[i] == label) return int(i);
    return -1;
}

int Quiver::arrow_index(const std::string& label) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].label == label) return int(i);
    return -1;
}

bool Quiver::connected() const {
    if (vertex_labels.empty()) return true;
    std::vector<bool> seen(vertex_labels.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : arrows) {
            int w = -1;
            if (a.src == v) w = a.tgt;
            else if (a.tgt == v) w = a.src;
            if (w >= 0 && !seen[w]) { seen[w] = true; stack.push_back(w); }
        }
    }
    for (bool b : seen)
        if (!b) return false;
    return true;
}

void Quiver::validate() const {
    std::set<std::string> labels;
    for (const std::string& l : vertex_labels)
        if (!labels.insert(l).second) throw QhError("duplicate vertex label '" + l + "'");
    std::set<std::string> alabels;
    for (const Arrow& a : arrows) {
        if (!alabels.insert(a.label).second) throw QhError("duplicate arrow label '" + a.label + "'");
        if (a.src < 0 || a.src >= vertex_count() || a.tgt < 0 || a.tgt >= vertex_count())
            throw QhError("arrow '" + a.label + "' has an endpoint outside the vertex list");
    }
}

void Relation::validate(const Quiver& q, const Field& f) const {
    if (terms.empty()) throw QhError("empty relation");
    int src = -1, tgt = -1;
    size_t len = terms.front().arrows.size();
    bool nonzero = false;
    for (const RelationTerm& t : terms) {
        if (t.arrows.size() < 2) throw QhError("relation term of length < 2 (ideal must be admissible)");
        if (t.arrows.size() != len)
            throw QhError("relation mixes path lengths; only length-homogeneous relations are supported");
        for (size_t k = 0; k + 1 < t.arrows.size(); ++k)
            if (q.arrows[t.arrows[k]].tgt != q.arrows[t.arrows[k + 1]].src)
                throw QhError("relation term is not a composable path");
        int s = q.arrows[t.arrows.front()].src;
        int e = q.arrows[t.arrows.back()].tgt;
        if (src < 0) { src = s; tgt = e; }
        else if (s != src || e != tgt)
            throw QhError("relation terms are not parallel paths");
        if (!f.is_zero(t.coef)) nonzero = true;
    }
    if (!nonzero) throw QhError("relation with all coefficients zero");
}

} // namespace quiverhom
