#include "quiverhom/module.hpp"

#include <numeric>

namespace quiverhom {

QuiverModule::QuiverModule(AlgebraPtr a, std::vector<int> dims, std::vector<Matrix> action)
    : algebra_(std::move(a)), dims_(std::move(dims)), action_(std::move(action)) {
    if (int(dims_.size()) != algebra_->vertex_count())
        throw QhError("module dimension vector has wrong length");
    if (int(action_.size()) != algebra_->arrow_count())
        throw QhError("module arrow matrix list has wrong length");
    for (int ar = 0; ar < algebra_->arrow_count(); ++ar) {
        const Arrow& a2 = algebra_->quiver().arrows[ar];
        if (action_[ar].rows() != dims_[a2.src] || action_[ar].cols() != dims_[a2.tgt])
            throw QhError("arrow matrix shape mismatch at '" + a2.label + "'");
    }
}

QuiverModule QuiverModule::zero(AlgebraPtr a) {
    std::vector<int> dims(a->vertex_count(), 0);
    std::vector<Matrix> act;
    for (const Arrow& ar : a->quiver().arrows) {
        (void)ar;
        act.emplace_back(a->field(), 0, 0);
    }
    return QuiverModule(std::move(a), std::move(dims), std::move(act));
}

int QuiverModule::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

RowVec QuiverModule::apply_arrow(int arrow, const RowVec& x) const {
    return mat_vec_row(x, action_[arrow]);
}

RowVec QuiverModule::apply_path(int vertex, const RowVec& x, std::span<const int> arrows) const {
    RowVec v = x;
    int at = vertex;
    for (int a : arrows) {
        if (algebra_->quiver().arrows[a].src != at) throw QhError("path not composable at vertex");
        v = mat_vec_row(v, action_[a]);
        at = algebra_->quiver().arrows[a].tgt;
    }
    return v;
}

Matrix QuiverModule::path_matrix(int vertex, std::span<const int> arrows) const {
    const Field& f = algebra_->field();
    Matrix m = Matrix::identity(f, dims_[vertex]);
    for (int a : arrows) m = m * action_[a];
    return m;
}

void QuiverModule::validate() const {
    const Field& f = algebra_->field();
    for (int a = 0; a < algebra_->arrow_count(); ++a) (void)a;
    for (const Relation& r : algebra_->relations()) {
        int src = r.source(algebra_->quiver());
        int tgt = r.target(algebra_->quiver());
        Matrix acc(f, dims_[src], dims_[tgt]);
        for (const RelationTerm& t : r.terms) {
            Matrix pm = path_matrix(src, t.arrows);
            for (int i = 0; i < acc.rows(); ++i)
                for (int j = 0; j < acc.cols(); ++j)
                    acc.at(i, j) = f.add(acc.at(i, j), f.mul(t.coef, pm.at(i, j)));
        }
        if (!acc.is_zero()) throw QhError("relation does not act as zero on module");
    }
}

QuiverModule direct_sum(const std::vector<QuiverModule>& parts) {
    if (parts.empty()) throw QhError("direct_sum of nothing");
    AlgebraPtr a = parts.front().algebra();
    const Field& f = a->field();
    for (const QuiverModule& p : parts)
        if (p.algebra() != a) throw AlgebraMismatchError();
    std::vector<int> dims(a->vertex_count(), 0);
    for (const QuiverModule& p : parts)
        for (int v = 0; v < a->vertex_count(); ++v) dims[v] += p.dim(v);
    std::vector<Matrix> act;
    for (int ar = 0; ar < a->arrow_count(); ++ar) {
        const Arrow& arw = a->quiver().arrows[ar];
        Matrix m(f, dims[arw.src], dims[arw.tgt]);
        int ro = 0, co = 0;
        for (const QuiverModule& p : parts) {
            const Matrix& pm = p.action(ar);
            for (int i = 0; i < pm.rows(); ++i)
                for (int j = 0; j < pm.cols(); ++j) m.at(ro + i, co + j) = pm.at(i, j);
            ro += p.dim(arw.src);
            co += p.dim(arw.tgt);
        }
        act.push_back(std::move(m));
    }
    return QuiverModule(a, std::move(dims), std::move(act));
}

void ModuleMap::validate() const {
    if (source.algebra() != target.algebra()) throw AlgebraMismatchError();
    const AlgebraPtr& alg = source.algebra();
    const Field& f = alg->field();
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        Matrix lhs = source.action(a) * comps[ar.tgt];
        Matrix rhs = comps[ar.src] * target.action(a);
        if (!(lhs == rhs)) throw QhError("map does not intertwine arrow '" + ar.label + "'");
    }
    (void)f;
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
    if (!(target == g.source)) throw QhError("composition target/source mismatch");
    ModuleMap out{source, g.target, {}};
    for (size_t v = 0; v < comps.size(); ++v) out.comps.push_back(comps[v] * g.comps[v]);
    return out;
}

bool ModuleMap::is_zero() const {
    for (const Matrix& m : comps)
        if (!m.is_zero()) return false;
    return true;
}

int ModuleMap::rank(int v) const { return rref(comps[v]).rank(); }

bool ModuleMap::is_injective_map() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (rref(comps[v]).rank() != source.dim(int(v))) return false;
    return true;
}

bool ModuleMap::is_surjective_map() const {
    for (size_t v = 0; v < comps.size(); ++v)
        if (rref(comps[v]).rank() != target.dim(int(v))) return false;
    return true;
}

bool ModuleMap::is_isomorphism() const {
    return source.dims() == target.dims() && is_injective_map();
}

ModuleMap zero_map(const QuiverModule& src, const QuiverModule& tgt) {
    ModuleMap f{src, tgt, {}};
    for (int v = 0; v < src.algebra()->vertex_count(); ++v)
        f.comps.emplace_back(src.algebra()->field(), src.dim(v), tgt.dim(v));
    return f;
}

ModuleMap identity_map(const QuiverModule& m) {
    ModuleMap f{m, m, {}};
    for (int v = 0; v < m.algebra()->vertex_count(); ++v)
        f.comps.push_back(Matrix::identity(m.algebra()->field(), m.dim(v)));
    return f;
}

QuiverModule dual(const QuiverModule& m) {
    AlgebraPtr op = m.algebra()->opposite();
    std::vector<Matrix> act;
    for (int a = 0; a < op->arrow_count(); ++a) act.push_back(m.action(a).transpose());
    return QuiverModule(op, m.dims(), std::move(act));
}

ModuleMap dual_map(const ModuleMap& f) {
    ModuleMap out{dual(f.target), dual(f.source), {}};
    for (const Matrix& c : f.comps) out.comps.push_back(c.transpose());
    return out;
}

Submodule submodule_from_spans(const QuiverModule& m, std::vector<RowSpan> spans) {
    const AlgebraPtr& alg = m.algebra();
    const Field& f = alg->field();
    std::vector<int> dims;
    for (int v = 0; v < alg->vertex_count(); ++v) dims.push_back(spans[v].dim());
    std::vector<Matrix> act;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        Matrix sub(f, dims[ar.src], dims[ar.tgt]);
        for (int i = 0; i < dims[ar.src]; ++i) {
            RowVec img = m.apply_arrow(a, spans[ar.src].basis().row(i));
            auto coord = spans[ar.tgt].coordinates(img);
            if (!coord) throw QhError("spans are not arrow-stable; not a submodule");
            sub.set_row(i, *coord);
        }
        act.push_back(std::move(sub));
    }
    QuiverModule module(alg, dims, std::move(act));
    ModuleMap incl{module, m, {}};
    for (int v = 0; v < alg->vertex_count(); ++v) incl.comps.push_back(spans[v].basis());
    return {std::move(spans), std::move(module), std::move(incl)};
}

Submodule submodule_generated(const QuiverModule& m,
                              const std::vector<std::vector<RowVec>>& gens) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v)
        spans.emplace_back(alg->field(), m.dim(v));
    // Worklist closure under the arrow action.
    std::vector<std::pair<int, RowVec>> work;
    for (int v = 0; v < alg->vertex_count(); ++v)
        for (const RowVec& g : gens[v])
            if (spans[v].grow(g)) work.emplace_back(v, g);
    while (!work.empty()) {
        auto [v, x] = work.back();
        work.pop_back();
        for (int a = 0; a < alg->arrow_count(); ++a) {
            const Arrow& ar = alg->quiver().arrows[a];
            if (ar.src != v) continue;
            RowVec y = m.apply_arrow(a, x);
            if (spans[ar.tgt].grow(y)) work.emplace_back(ar.tgt, y);
        }
    }
    return submodule_from_spans(m, std::move(spans));
}

QuotientModule quotient_by(const QuiverModule& m, const std::vector<RowSpan>& spans) {
    const AlgebraPtr& alg = m.algebra();
    const Field& f = alg->field();
    // Complement coordinates: the non-pivot columns of each span.
    std::vector<std::vector<int>> free_cols(alg->vertex_count());
    std::vector<Matrix> proj; // m_v -> quotient coords
    for (int v = 0; v < alg->vertex_count(); ++v) {
        std::vector<bool> is_pivot(m.dim(v), false);
        const Matrix& b = spans[v].basis();
        // Pivot columns are the leading columns of the reduced basis rows.
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c)
                if (!f.is_zero(b.at(r, c))) { is_pivot[c] = true; break; }
        for (int c = 0; c < m.dim(v); ++c)
            if (!is_pivot[c]) free_cols[v].push_back(c);
        Matrix p(f, m.dim(v), int(free_cols[v].size()));
        for (int c = 0; c < m.dim(v); ++c) {
            // Reduce the unit vector e_c modulo the span, read off free coords.
            RowVec e(m.dim(v), f.zero());
            e[c] = f.one();
            for (int r = 0; r < b.rows(); ++r) {
                // leading column of row r
                int lead = -1;
                for (int cc = 0; cc < b.cols(); ++cc)
                    if (!f.is_zero(b.at(r, cc))) { lead = cc; break; }
                Scalar coef = e[lead];
                if (f.is_zero(coef)) continue;
                for (int cc = 0; cc < b.cols(); ++cc)
                    e[cc] = f.sub(e[cc], f.mul(coef, b.at(r, cc)));
            }
            for (size_t k = 0; k < free_cols[v].size(); ++k) p.at(c, int(k)) = e[free_cols[v][k]];
        }
        proj.push_back(std::move(p));
    }
    std::vector<int> dims;
    for (int v = 0; v < alg->vertex_count(); ++v) dims.push_back(int(free_cols[v].size()));
    std::vector<Matrix> act;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        Matrix q(f, dims[ar.src], dims[ar.tgt]);
        for (int i = 0; i < dims[ar.src]; ++i) {
            RowVec e(m.dim(ar.src), f.zero());
            e[free_cols[ar.src][i]] = f.one();
            RowVec img = m.apply_arrow(a, e);
            q.set_row(i, mat_vec_row(img, proj[ar.tgt]));
        }
        act.push_back(std::move(q));
    }
    QuiverModule module(alg, dims, std::move(act));
    ModuleMap pr{m, module, std::move(proj)};
    return {std::move(module), std::move(pr)};
}

std::vector<ModuleMap> hom_basis(const QuiverModule& m, const QuiverModule& n) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatchError();
    const AlgebraPtr& alg = m.algebra();
    const Field& f = alg->field();
    const int nv = alg->vertex_count();
    std::vector<int> offset(nv + 1, 0);
    for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + m.dim(v) * n.dim(v);
    const int nvars = offset[nv];
    if (nvars == 0) return {};

    int nrows = 0;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        nrows += m.dim(ar.src) * n.dim(ar.tgt);
    }
    Matrix c(f, nrows, nvars);
    int row = 0;
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        const Matrix& ma = m.action(a);
        const Matrix& na = n.action(a);
        for (int i = 0; i < m.dim(ar.src); ++i)
            for (int j = 0; j < n.dim(ar.tgt); ++j) {
                // sum_k ma[i,k] F_tgt[k,j] - sum_l F_src[i,l] na[l,j] = 0
                for (int k = 0; k < m.dim(ar.tgt); ++k) {
                    const Scalar& s = ma.at(i, k);
                    if (f.is_zero(s)) continue;
                    int var = offset[ar.tgt] + k * n.dim(ar.tgt) + j;
                    c.at(row, var) = f.add(c.at(row, var), s);
                }
                for (int l = 0; l < n.dim(ar.src); ++l) {
                    const Scalar& s = na.at(l, j);
                    if (f.is_zero(s)) continue;
                    int var = offset[ar.src] + i * n.dim(ar.src) + l;
                    c.at(row, var) = f.sub(c.at(row, var), s);
                }
                ++row;
            }
    }
    std::vector<RowVec> sol = kernel_basis(c);
    std::vector<ModuleMap> out;
    for (const RowVec& x : sol) {
        ModuleMap h{m, n, {}};
        for (int v = 0; v < nv; ++v) {
            Matrix fv(f, m.dim(v), n.dim(v));
            for (int i = 0; i < m.dim(v); ++i)
                for (int j = 0; j < n.dim(v); ++j) fv.at(i, j) = x[offset[v] + i * n.dim(v) + j];
            h.comps.push_back(std::move(fv));
        }
        out.push_back(std::move(h));
    }
    return out;
}

int hom_dim(const QuiverModule& m, const QuiverModule& n) {
    return int(hom_basis(m, n).size());
}

Submodule kernel(const ModuleMap& f) {
    const AlgebraPtr& alg = f.source.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) {
        RowSpan s(alg->field(), f.source.dim(v));
        for (const RowVec& k : kernel_basis(f.comps[v].transpose())) s.grow(k);
        spans.push_back(std::move(s));
    }
    return submodule_from_spans(f.source, std::move(spans));
}

Submodule image(const ModuleMap& f) {
    const AlgebraPtr& alg = f.target.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) spans.emplace_back(RowSpan(f.comps[v]));
    return submodule_from_spans(f.target, std::move(spans));
}

ModuleMap image_factorization(const ModuleMap& f, const Submodule& im) {
    const AlgebraPtr& alg = f.source.algebra();
    ModuleMap out{f.source, im.module, {}};
    for (int v = 0; v < alg->vertex_count(); ++v) {
        Matrix m(alg->field(), f.source.dim(v), im.module.dim(v));
        for (int i = 0; i < f.source.dim(v); ++i) {
            auto coord = im.spans[v].coordinates(f.comps[v].row(i));
            if (!coord) throw QhError("image span does not contain the image (internal error)");
            m.set_row(i, *coord);
        }
        out.comps.push_back(std::move(m));
    }
    return out;
}

QuotientModule cokernel(const ModuleMap& f) {
    const AlgebraPtr& alg = f.target.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) spans.emplace_back(RowSpan(f.comps[v]));
    return quotient_by(f.target, spans);
}

Submodule radical(const QuiverModule& m) {
    const AlgebraPtr& alg = m.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) spans.emplace_back(alg->field(), m.dim(v));
    for (int a = 0; a < alg->arrow_count(); ++a) {
        const Arrow& ar = alg->quiver().arrows[a];
        for (int i = 0; i < m.dim(ar.src); ++i)
            spans[ar.tgt].grow(m.action(a).row(i));
    }
    return submodule_from_spans(m, std::move(spans));
}

Submodule socle(const QuiverModule& m) {
    const AlgebraPtr& alg = m.algebra();
    const Field& f = alg->field();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) {
        // Joint left kernel of all arrows leaving v.
        int wide = 0;
        for (int a = 0; a < alg->arrow_count(); ++a)
            if (alg->quiver().arrows[a].src == v) wide += m.dim(alg->quiver().arrows[a].tgt);
        Matrix stacked(f, m.dim(v), wide);
        int col = 0;
        for (int a = 0; a < alg->arrow_count(); ++a) {
            const Arrow& ar = alg->quiver().arrows[a];
            if (ar.src != v) continue;
            for (int i = 0; i < m.dim(v); ++i)
                for (int j = 0; j < m.dim(ar.tgt); ++j)
                    stacked.at(i, col + j) = m.action(a).at(i, j);
            col += m.dim(ar.tgt);
        }
        RowSpan s(f, m.dim(v));
        for (const RowVec& k : kernel_basis(stacked.transpose())) s.grow(k);
        spans.push_back(std::move(s));
    }
    return submodule_from_spans(m, std::move(spans));
}

QuotientModule top(const QuiverModule& m) {
    return quotient_by(m, radical(m).spans);
}

std::vector<int> top_multiplicities(const QuiverModule& m) {
    Submodule r = radical(m);
    std::vector<int> out;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v)
        out.push_back(m.dim(v) - r.module.dim(v));
    return out;
}

std::vector<int> socle_multiplicities(const QuiverModule& m) {
    Submodule s = socle(m);
    std::vector<int> out;
    for (int v = 0; v < m.algebra()->vertex_count(); ++v) out.push_back(s.module.dim(v));
    return out;
}

Submodule trace(const QuiverModule& m, const QuiverModule& n) {
    std::vector<ModuleMap> homs = hom_basis(m, n);
    const AlgebraPtr& alg = n.algebra();
    std::vector<RowSpan> spans;
    for (int v = 0; v < alg->vertex_count(); ++v) {
        RowSpan s(alg->field(), n.dim(v));
        for (const ModuleMap& h : homs)
            for (int i = 0; i < m.dim(v); ++i) s.grow(h.comps[v].row(i));
        spans.push_back(std::move(s));
    }
    return submodule_from_spans(n, std::move(spans));
}

bool gen_membership(const QuiverModule& x, const QuiverModule& m) {
    Submodule t = trace(m, x);
    return t.module.dims() == x.dims();
}

bool cogen_membership(const QuiverModule& x, const QuiverModule& m) {
    std::vector<ModuleMap> homs = hom_basis(x, m);
    const AlgebraPtr& alg = x.algebra();
    const Field& f = alg->field();
    for (int v = 0; v < alg->vertex_count(); ++v) {
        if (x.dim(v) == 0) continue;
        int wide = 0;
        for (const ModuleMap& h : homs) wide += h.comps[v].cols();
        Matrix stacked(f, x.dim(v), wide);
        int col = 0;
        for (const ModuleMap& h : homs) {
            for (int i = 0; i < x.dim(v); ++i)
                for (int j = 0; j < h.comps[v].cols(); ++j)
                    stacked.at(i, col + j) = h.comps[v].at(i, j);
            col += h.comps[v].cols();
        }
        if (!kernel_basis(stacked.transpose()).empty()) return false;
    }
    return true;
}

} // namespace quiverhom
