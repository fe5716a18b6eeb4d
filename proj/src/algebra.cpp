#include "quiverhom/algebra.hpp"

#include <algorithm>
#include <map>

namespace quiverhom {

void add_scaled(AlgElem& dst, const AlgElem& src, const Scalar& coef, const Field& f) {
    if (f.is_zero(coef)) return;
    AlgElem out;
    out.reserve(dst.size() + src.size());
    size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, f.mul(coef, src[j].second));
            ++j;
        } else {
            Scalar s = f.add(dst[i].second, f.mul(coef, src[j].second));
            if (!f.is_zero(s)) out.emplace_back(dst[i].first, s);
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

void KupischSeries::validate() const {
    int n = size();
    if (n == 0) throw InvalidKupischError("empty Kupisch series");
    for (int v : entries)
        if (v < 1) throw InvalidKupischError("Kupisch entries must be >= 1");
    if (kind == Kind::Linear) {
        if (entries[n - 1] != 1)
            throw InvalidKupischError("linear series needs c_n = 1, got c_n = " +
                                      std::to_string(entries[n - 1]));
        for (int i = 0; i + 1 < n; ++i)
            if (entries[i] < 2)
                throw InvalidKupischError("linear series needs c_" + std::to_string(i + 1) +
                                          " >= 2, got " + std::to_string(entries[i]));
        for (int i = 0; i + 1 < n; ++i)
            if (entries[i + 1] < entries[i] - 1)
                throw InvalidKupischError("c_" + std::to_string(i + 2) + " = " +
                                          std::to_string(entries[i + 1]) + " violates c_" +
                                          std::to_string(i + 2) + " >= c_" +
                                          std::to_string(i + 1) + " - 1");
    } else {
        for (int i = 0; i < n; ++i)
            if (entries[i] < 2)
                throw InvalidKupischError("cyclic series needs c_" + std::to_string(i + 1) +
                                          " >= 2, got " + std::to_string(entries[i]));
        for (int i = 0; i < n; ++i)
            if (entries[(i + 1) % n] < entries[i] - 1)
                throw InvalidKupischError("c_" + std::to_string((i + 1) % n + 1) + " = " +
                                          std::to_string(entries[(i + 1) % n]) +
                                          " violates c_{i+1} >= c_i - 1 at i = " +
                                          std::to_string(i + 1));
    }
}

std::string KupischSeries::to_string() const {
    std::string s = kind == Kind::Linear ? "linear [" : "cyclic [";
    for (int i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries[i]);
    }
    return s + "]";
}

namespace {

// All paths of one length, indexed within the degree.
struct DegreePaths {
    std::vector<std::vector<int>> arrows; // arrow sequences
    std::vector<int> src, tgt;
    std::map<std::vector<int>, int> index;
};

constexpr size_t kMaxPathsPerDegree = 200000;

} // namespace

AlgebraPtr BoundQuiverAlgebra::build(Quiver q, std::vector<Relation> rels, Field field,
                                     int length_cap) {
    q.validate();
    for (const Relation& r : rels) r.validate(q, field);

    auto alg = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra());
    alg->quiver_ = std::move(q);
    alg->field_ = field;
    alg->relations_ = std::move(rels);
    alg->connected_ = alg->quiver_.connected();
    alg->construct(length_cap);
    return alg;
}

void BoundQuiverAlgebra::construct(int length_cap) {
    const int nv = quiver_.vertex_count();
    const int na = quiver_.arrow_count();
    int effective_cap = length_cap;
    for (const Relation& r : relations_)
        effective_cap = std::max(effective_cap, int(r.length()) + 1);

    // Relations grouped by degree.
    std::map<int, std::vector<const Relation*>> rels_by_deg;
    for (const Relation& r : relations_) rels_by_deg[int(r.length())].push_back(&r);

    // Degree 0: trivial paths, always a basis.
    basis_.clear();
    for (int v = 0; v < nv; ++v) basis_.push_back({v, v, {}});

    DegreePaths prev; // all paths of the previous degree
    for (int v = 0; v < nv; ++v) {
        prev.arrows.push_back({});
        prev.src.push_back(v);
        prev.tgt.push_back(v);
        prev.index[{}] = v; // index map unused at degree 0
    }
    // Ideal basis of the previous degree, in full-path coordinates.
    std::vector<std::vector<std::pair<int, Scalar>>> prev_ideal;
    std::vector<int> prev_basis_ids(nv);
    for (int v = 0; v < nv; ++v) prev_basis_ids[v] = v;

    right_mult_.assign(size_t(nv) * na, {});
    arrow_ids_.assign(na, -1);
    nilpotency_ = 1;

    for (int d = 1;; ++d) {
        // Enumerate all degree-d paths.
        DegreePaths cur;
        for (size_t p = 0; p < prev.arrows.size(); ++p) {
            for (int a = 0; a < na; ++a) {
                if (quiver_.arrows[a].src != prev.tgt[p]) continue;
                std::vector<int> seq = prev.arrows[p];
                seq.push_back(a);
                cur.index[seq] = int(cur.arrows.size());
                cur.src.push_back(prev.src[p]);
                cur.tgt.push_back(quiver_.arrows[a].tgt);
                cur.arrows.push_back(std::move(seq));
                if (cur.arrows.size() > kMaxPathsPerDegree)
                    throw QhError("path count exploded at degree " + std::to_string(d) +
                                  "; quiver too wild for the dense builder");
            }
        }
        if (cur.arrows.empty()) { nilpotency_ = d; break; }

        const int np = int(cur.arrows.size());
        // Ideal generators at degree d: V_1 * I_{d-1} + I_{d-1} * V_1 + R_d.
        Matrix gens(field_, 0, np);
        std::vector<RowVec> rows;
        auto push_row = [&](const std::vector<std::pair<int, Scalar>>& combo) {
            RowVec row(np, field_.zero());
            for (auto& [idx, c] : combo) row[idx] = field_.add(row[idx], c);
            rows.push_back(std::move(row));
        };
        for (const auto& v : prev_ideal) {
            // v * arrow
            for (int a = 0; a < na; ++a) {
                std::vector<std::pair<int, Scalar>> combo;
                for (auto& [pidx, c] : v) {
                    if (prev.tgt[pidx] != quiver_.arrows[a].src) continue;
                    std::vector<int> seq = prev.arrows[pidx];
                    seq.push_back(a);
                    combo.emplace_back(cur.index.at(seq), c);
                }
                if (!combo.empty()) push_row(combo);
            }
            // arrow * v
            for (int a = 0; a < na; ++a) {
                std::vector<std::pair<int, Scalar>> combo;
                for (auto& [pidx, c] : v) {
                    if (prev.src[pidx] != quiver_.arrows[a].tgt) continue;
                    std::vector<int> seq;
                    seq.reserve(prev.arrows[pidx].size() + 1);
                    seq.push_back(a);
                    seq.insert(seq.end(), prev.arrows[pidx].begin(), prev.arrows[pidx].end());
                    combo.emplace_back(cur.index.at(seq), c);
                }
                if (!combo.empty()) push_row(combo);
            }
        }
        if (auto it = rels_by_deg.find(d); it != rels_by_deg.end()) {
            for (const Relation* r : it->second) {
                std::vector<std::pair<int, Scalar>> combo;
                for (const RelationTerm& t : r->terms)
                    combo.emplace_back(cur.index.at(t.arrows), t.coef);
                push_row(combo);
            }
        }

        Matrix genmat(field_, int(rows.size()), np);
        for (size_t r = 0; r < rows.size(); ++r) genmat.set_row(int(r), rows[r]);
        RrefResult rr = rref(genmat);

        std::vector<bool> is_pivot(np, false);
        std::vector<int> pivot_row(np, -1);
        for (size_t r = 0; r < rr.pivot_columns.size(); ++r) {
            is_pivot[rr.pivot_columns[r]] = true;
            pivot_row[rr.pivot_columns[r]] = int(r);
        }

        // Non-pivot paths become basis elements of degree d.
        std::vector<int> cur_basis_ids(np, -1);
        std::vector<int> fresh;
        for (int p = 0; p < np; ++p) {
            if (is_pivot[p]) continue;
            cur_basis_ids[p] = int(basis_.size());
            basis_.push_back({cur.src[p], cur.tgt[p], cur.arrows[p]});
            fresh.push_back(p);
            if (d == 1) arrow_ids_[cur.arrows[p][0]] = cur_basis_ids[p];
        }
        if (d == 1)
            for (int ar = 0; ar < na; ++ar)
                if (arrow_ids_[ar] < 0)
                    throw QhError("arrow '" + quiver_.arrows[ar].label +
                                  "' dies in the quotient; ideal is not admissible");
        std::vector<AlgElem> cur_nf(np);
        for (int p = 0; p < np; ++p) {
            if (!is_pivot[p]) {
                cur_nf[p] = {{cur_basis_ids[p], field_.one()}};
                continue;
            }
            int r = pivot_row[p];
            AlgElem e;
            for (int c = p + 1; c < np; ++c) {
                if (is_pivot[c]) continue;
                const Scalar& s = rr.reduced.at(r, c);
                if (!field_.is_zero(s))
                    e.emplace_back(cur_basis_ids[c], field_.neg(s));
            }
            std::sort(e.begin(), e.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            cur_nf[p] = std::move(e);
        }

        // Fill the multiplication table rows for the previous degree's basis.
        right_mult_.resize(size_t(basis_.size()) * na);
        for (int bid : prev_basis_ids) {
            const BasisPath& bp = basis_[bid];
            for (int a = 0; a < na; ++a) {
                if (quiver_.arrows[a].src != bp.tgt) continue;
                std::vector<int> seq = bp.arrows;
                seq.push_back(a);
                right_mult_[size_t(bid) * na + a] = cur_nf[cur.index.at(seq)];
            }
        }

        if (fresh.empty()) { nilpotency_ = d; break; }
        if (d >= effective_cap) throw NotAdmissibleError(effective_cap);

        // Advance.
        std::vector<std::vector<std::pair<int, Scalar>>> cur_ideal;
        for (size_t r = 0; r < rr.pivot_columns.size(); ++r) {
            std::vector<std::pair<int, Scalar>> v;
            for (int c = 0; c < np; ++c) {
                const Scalar& s = rr.reduced.at(int(r), c);
                if (!field_.is_zero(s)) v.emplace_back(c, s);
            }
            cur_ideal.push_back(std::move(v));
        }
        prev = std::move(cur);
        prev_ideal = std::move(cur_ideal);
        prev_basis_ids.clear();
        for (int p = 0; p < int(prev.arrows.size()); ++p)
            if (cur_basis_ids[p] >= 0) prev_basis_ids.push_back(cur_basis_ids[p]);
    }

    right_mult_.resize(size_t(basis_.size()) * na);

    paths_from_.assign(nv, {});
    paths_from_to_.assign(size_t(nv) * nv, {});
    for (int b = 0; b < dim(); ++b) {
        paths_from_[basis_[b].src].push_back(b);
        paths_from_to_[size_t(basis_[b].src) * nv + basis_[b].tgt].push_back(b);
    }
}

AlgElem BoundQuiverAlgebra::product_basis(int b, int c) const {
    const BasisPath& pc = basis_[c];
    AlgElem acc = {{b, field_.one()}};
    if (basis_[b].tgt != pc.src) return {};
    for (int a : pc.arrows) {
        AlgElem next;
        for (auto& [bid, coef] : acc)
            add_scaled(next, right_mult_[size_t(bid) * arrow_count() + a], coef, field_);
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

AlgElem BoundQuiverAlgebra::product(const AlgElem& x, const AlgElem& y) const {
    AlgElem out;
    for (auto& [bx, cx] : x)
        for (auto& [by, cy] : y) {
            if (basis_[bx].tgt != basis_[by].src) continue;
            add_scaled(out, product_basis(bx, by), field_.mul(cx, cy), field_);
        }
    return out;
}

AlgElem BoundQuiverAlgebra::reduce_term(const Scalar& coef, const std::vector<int>& arrows) const {
    int v = quiver_.arrows[arrows.front()].src;
    AlgElem acc = {{trivial_path(v), coef}};
    for (int a : arrows) {
        AlgElem next;
        for (auto& [bid, c] : acc)
            add_scaled(next, right_mult_[size_t(bid) * arrow_count() + a], c, field_);
        acc = std::move(next);
        if (acc.empty()) break;
    }
    return acc;
}

AlgElem BoundQuiverAlgebra::reduce_relation(const Relation& r) const {
    AlgElem acc;
    for (const RelationTerm& t : r.terms)
        add_scaled(acc, reduce_term(field_.one(), t.arrows), t.coef, field_);
    return acc;
}

AlgebraPtr BoundQuiverAlgebra::nakayama(const KupischSeries& k, Field field) {
    k.validate();
    const int n = k.size();
    Quiver q;
    for (int i = 1; i <= n; ++i) q.vertex_labels.push_back(std::to_string(i));
    const bool cyclic = k.kind == KupischSeries::Kind::Cyclic;
    const int narrows = cyclic ? n : n - 1;
    for (int i = 0; i < narrows; ++i)
        q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % n});

    // Zero relation of length c_i starting at vertex i, whenever that path
    // exists in the quiver.
    std::vector<Relation> rels;
    for (int i = 0; i < n; ++i) {
        int len = k.entries[i];
        if (!cyclic && i + len > n - 1) continue; // path runs off the chain
        std::vector<int> arrows;
        for (int t = 0; t < len; ++t) arrows.push_back((i + t) % narrows);
        rels.push_back({{{field.one(), arrows}}});
    }
    int cap = 2;
    for (int c : k.entries) cap = std::max(cap, c + 1);

    auto alg = std::const_pointer_cast<BoundQuiverAlgebra>(build(q, rels, field, cap));
    alg->kupisch_ = k;
    for (int i = 0; i < n; ++i)
        if (int(alg->paths_from(i).size()) != k.entries[i])
            throw QhError("Kupisch construction failed: dim e_" + std::to_string(i + 1) +
                          "A = " + std::to_string(alg->paths_from(i).size()) + " expected " +
                          std::to_string(k.entries[i]));
    return alg;
}

AlgebraPtr BoundQuiverAlgebra::make_opposite() const {
    Quiver q;
    q.vertex_labels = quiver_.vertex_labels;
    for (const Arrow& a : quiver_.arrows) q.arrows.push_back({a.label, a.tgt, a.src});
    std::vector<Relation> rels;
    for (const Relation& r : relations_) {
        Relation rr;
        for (const RelationTerm& t : r.terms) {
            RelationTerm tt;
            tt.coef = t.coef;
            tt.arrows.assign(t.arrows.rbegin(), t.arrows.rend());
            rr.terms.push_back(std::move(tt));
        }
        rels.push_back(std::move(rr));
    }
    int cap = std::max(2, nilpotency_ + 1);
    return build(q, rels, field_, cap);
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (op_strong_) return op_strong_;
    if (auto back = op_weak_.lock()) return back;
    AlgebraPtr op = make_opposite();
    op_strong_ = op;
    {
        std::lock_guard<std::mutex> lock2(op->op_mutex_);
        op->op_weak_ = weak_from_this();
    }
    return op;
}

std::optional<BoundQuiverAlgebra::NakayamaChain> BoundQuiverAlgebra::nakayama_chain() const {
    const int nv = vertex_count();
    const int na = arrow_count();
    if (!connected_) return std::nullopt;
    std::vector<int> out(nv, -1), indeg(nv, 0);
    for (int a = 0; a < na; ++a) {
        const Arrow& ar = quiver_.arrows[a];
        if (out[ar.src] != -1) return std::nullopt;
        out[ar.src] = ar.tgt;
        if (++indeg[ar.tgt] > 1) return std::nullopt;
    }
    NakayamaChain chain;
    if (na == nv - 1) {
        chain.kind = KupischSeries::Kind::Linear;
        int start = -1;
        for (int v = 0; v < nv; ++v)
            if (indeg[v] == 0) { if (start != -1) return std::nullopt; start = v; }
        if (start < 0) return std::nullopt;
        int v = start;
        for (int k = 0; k < nv; ++k) {
            chain.order.push_back(v);
            v = out[v];
        }
        if (v != -1) return std::nullopt;
    } else if (na == nv) {
        chain.kind = KupischSeries::Kind::Cyclic;
        int v = 0;
        for (int k = 0; k < nv; ++k) {
            if (v < 0) return std::nullopt;
            chain.order.push_back(v);
            v = out[v];
        }
        if (v != 0) return std::nullopt;
    } else {
        return std::nullopt;
    }
    for (int v : chain.order) chain.c.push_back(int(paths_from(v).size()));
    return chain;
}

} // namespace quiverhom
