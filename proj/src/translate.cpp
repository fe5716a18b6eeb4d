#include "quiverhom/translate.hpp"

namespace quiverhom {

namespace {

// Hom_A(P, A) for a structured projective P = ⊕_c P(v_c), as a module over
// the opposite algebra: vertex space at i is ⊕_c e_i A e_{v_c} with basis the
// algebra basis paths i -> v_c; the arrow a^op: w -> u acts by left
// multiplication with a: u -> w.
struct HomToRegular {
    QuiverModule mod; // over opposite(a)
    // layout: block_offset[c][i], block_paths[c][i] (paths i -> v_c)
    std::vector<std::vector<int>> block_offset;
    std::vector<std::vector<std::vector<int>>> block_paths;
};

HomToRegular hom_to_regular(const AlgebraPtr& a, const StructuredProjective& p) {
    const Field& f = a->field();
    AlgebraPtr op = a->opposite();
    const int nv = a->vertex_count();
    HomToRegular out;
    out.block_offset.assign(p.copies.size(), std::vector<int>(nv, 0));
    out.block_paths.assign(p.copies.size(), std::vector<std::vector<int>>(nv));
    std::vector<int> dims(nv, 0);
    for (size_t c = 0; c < p.copies.size(); ++c)
        for (int i = 0; i < nv; ++i) {
            out.block_paths[c][i] = a->paths_from_to(i, p.copies[c]);
            out.block_offset[c][i] = dims[i];
            dims[i] += int(out.block_paths[c][i].size());
        }
    // Position of (copy, basis id) inside vertex spaces.
    std::vector<std::vector<int>> pos(p.copies.size(), std::vector<int>(a->dim(), -1));
    for (size_t c = 0; c < p.copies.size(); ++c)
        for (int i = 0; i < nv; ++i)
            for (size_t k = 0; k < out.block_paths[c][i].size(); ++k)
                pos[c][out.block_paths[c][i][k]] = out.block_offset[c][i] + int(k);

    std::vector<Matrix> act;
    for (int ar = 0; ar < op->arrow_count(); ++ar) {
        // Same arrow index in a, with src/tgt swapped in op.
        const Arrow& orig = a->quiver().arrows[ar];
        // op arrow: orig.tgt -> orig.src; action H_{orig.tgt} -> H_{orig.src}
        Matrix m(f, dims[orig.tgt], dims[orig.src]);
        int aid = a->arrow_basis_id(ar);
        for (size_t c = 0; c < p.copies.size(); ++c)
            for (int pid : out.block_paths[c][orig.tgt]) {
                AlgElem prod = a->product_basis(aid, pid); // a . path, from orig.src
                for (auto& [qid, coef] : prod)
                    m.at(pos[c][pid], pos[c][qid]) = coef;
            }
        act.push_back(std::move(m));
    }
    out.mod = QuiverModule(op, std::move(dims), std::move(act));
    return out;
}

// Induced map Hom(P0, A) -> Hom(P1, A) of a presentation map d: P1 -> P0.
ModuleMap hom_to_regular_map(const AlgebraPtr& a, const StructuredProjective& p1,
                             const StructuredProjective& p0, const ModuleMap& d,
                             const HomToRegular& h0, const HomToRegular& h1) {
    const Field& f = a->field();
    const int nv = a->vertex_count();
    ModuleMap out{h0.mod, h1.mod, {}};
    for (int i = 0; i < nv; ++i)
        out.comps.emplace_back(f, h0.mod.dim(i), h1.mod.dim(i));
    for (int b = 0; b < p1.copy_count(); ++b) {
        int vb = p1.copies[b];
        RowVec dv = d.comps[vb].row(p1.generator_row(b)); // in (P0)_{vb}
        for (int aidx = 0; aidx < p0.copy_count(); ++aidx) {
            const auto& paths = p0.block_paths[aidx][vb];
            for (size_t t = 0; t < paths.size(); ++t) {
                Scalar coef = dv[p0.block_offset[aidx][vb] + int(t)];
                if (f.is_zero(coef)) continue;
                int p = paths[t]; // path v_a -> vb
                // phi = (copy aidx, pi: i -> v_a)  |->  psi with
                // psi(gen_b) += coef * pi * p  in e_i A e_vb.
                for (int i = 0; i < nv; ++i) {
                    const auto& pis = h0.block_paths[aidx][i];
                    for (size_t s = 0; s < pis.size(); ++s) {
                        AlgElem prod = a->product_basis(pis[s], p);
                        for (auto& [qid, c2] : prod) {
                            // locate qid inside h1 block b at vertex i
                            const auto& qpaths = h1.block_paths[b][i];
                            for (size_t u = 0; u < qpaths.size(); ++u) {
                                if (qpaths[u] != qid) continue;
                                int row = h0.block_offset[aidx][i] + int(s);
                                int col = h1.block_offset[b][i] + int(u);
                                out.comps[i].at(row, col) =
                                    f.add(out.comps[i].at(row, col), f.mul(coef, c2));
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

struct Presentation {
    StructuredProjective p0;
    StructuredProjective p1;
    ModuleMap d; // p1.mod -> p0.mod
};

Presentation minimal_presentation(const QuiverModule& m) {
    ProjectiveCover c0 = projective_cover(m);
    Submodule ker = kernel(c0.onto);
    ProjectiveCover c1 = projective_cover(ker.module);
    Presentation out{std::move(c0.cover), std::move(c1.cover), c1.onto.then(ker.inclusion)};
    return out;
}

} // namespace

QuiverModule transpose(const QuiverModule& m) {
    const AlgebraPtr& a = m.algebra();
    if (m.total_dim() == 0) return QuiverModule::zero(a->opposite());
    Presentation pr = minimal_presentation(m);
    HomToRegular h0 = hom_to_regular(a, pr.p0);
    HomToRegular h1 = hom_to_regular(a, pr.p1);
    ModuleMap star = hom_to_regular_map(a, pr.p1, pr.p0, pr.d, h0, h1);
    return cokernel(star).module;
}

QuiverModule tau(const QuiverModule& m) {
    return dual(transpose(m));
}

QuiverModule tau_inverse(const QuiverModule& m) {
    return transpose(dual(m));
}

QuiverModule tau_n(const QuiverModule& m, int n) {
    if (n < 1) throw QhError("tau_n needs n >= 1");
    QuiverModule x = m;
    for (int k = 0; k < n - 1; ++k) x = syzygy(x);
    return tau(x);
}

QuiverModule tau_n_inverse(const QuiverModule& m, int n) {
    if (n < 1) throw QhError("tau_n_inverse needs n >= 1");
    QuiverModule x = m;
    for (int k = 0; k < n - 1; ++k) x = cosyzygy(x);
    return tau_inverse(x);
}

QuiverModule nakayama_functor(const QuiverModule& m) {
    const AlgebraPtr& a = m.algebra();
    AlgebraPtr op = a->opposite();
    const Field& f = a->field();
    const int nv = a->vertex_count();
    if (m.total_dim() == 0) return QuiverModule::zero(a);

    // H_i = Hom(m, P(i)) as the vertex spaces of an op-module.
    std::vector<QuiverModule> projs;
    std::vector<std::vector<ModuleMap>> homs;
    for (int i = 0; i < nv; ++i) projs.push_back(projective(a, i));
    for (int i = 0; i < nv; ++i) homs.push_back(hom_basis(m, projs[i]));

    auto flatten = [&](const ModuleMap& h) {
        RowVec v;
        for (const Matrix& c : h.comps)
            for (int i = 0; i < c.rows(); ++i)
                for (int j = 0; j < c.cols(); ++j) v.push_back(c.at(i, j));
        return v;
    };
    std::vector<int> dims;
    std::vector<Matrix> hom_mat; // rows = flattened hom basis of H_i
    for (int i = 0; i < nv; ++i) {
        dims.push_back(int(homs[i].size()));
        int width = 0;
        for (int v = 0; v < nv; ++v) width += m.dim(v) * projs[i].dim(v);
        Matrix b(f, dims[i], width);
        for (int k = 0; k < dims[i]; ++k) b.set_row(k, flatten(homs[i][k]));
        hom_mat.push_back(std::move(b));
    }

    std::vector<Matrix> act;
    for (int ar = 0; ar < op->arrow_count(); ++ar) {
        const Arrow& orig = a->quiver().arrows[ar];
        int u = orig.src, w = orig.tgt;
        // lambda_a : P(w) -> P(u), path pi |-> a . pi (left multiplication).
        std::vector<Matrix> lam_comps;
        int aid = a->arrow_basis_id(ar);
        for (int j = 0; j < nv; ++j) {
            const auto& wpaths = a->paths_from_to(w, j);
            const auto& upaths = a->paths_from_to(u, j);
            Matrix c(f, int(wpaths.size()), int(upaths.size()));
            for (size_t s = 0; s < wpaths.size(); ++s) {
                AlgElem prod = a->product_basis(aid, wpaths[s]);
                for (auto& [qid, coef] : prod)
                    for (size_t t = 0; t < upaths.size(); ++t)
                        if (upaths[t] == qid) { c.at(int(s), int(t)) = coef; break; }
            }
            lam_comps.push_back(std::move(c));
        }
        ModuleMap lambda{projs[w], projs[u], std::move(lam_comps)};
        // H_w -> H_u over the original hom bases: solve against hom_mat[u].
        Matrix mat(f, dims[w], dims[u]);
        Matrix basis_t = hom_mat[u].transpose();
        for (int s = 0; s < dims[w]; ++s) {
            RowVec y = flatten(homs[w][s].then(lambda));
            auto x = solve(basis_t, y);
            if (!x) throw QhError("Hom(-,A) action left the hom space (internal error)");
            mat.set_row(s, *x);
        }
        act.push_back(std::move(mat));
    }

    QuiverModule homA(op, std::move(dims), std::move(act));
    return dual(homA);
}

QuiverModule nakayama_functor_inverse(const QuiverModule& m) {
    return dual(nakayama_functor(dual(m)));
}

std::vector<int> projective_injective_vertices_right(const AlgebraPtr& a) {
    ProjInjFlags flags = proj_inj_flags(a);
    std::vector<int> out;
    for (int v = 0; v < a->vertex_count(); ++v)
        if (flags.projective_is_injective[v]) out.push_back(v);
    return out;
}

std::vector<int> projective_injective_vertices_left(const AlgebraPtr& a) {
    ProjInjFlags flags = proj_inj_flags(a->opposite());
    std::vector<int> out;
    for (int v = 0; v < a->vertex_count(); ++v)
        if (flags.projective_is_injective[v]) out.push_back(v);
    return out;
}

namespace {

// Faithfulness of the projective-injective part, in the form the rest of
// the library relies on: positive dominant dimension forces the hull of the regular module
// into add(eA), i.e. every socle component of A has a projective hull.
void check_faithful_part(const AlgebraPtr& a) {
    if (!algebra_domdim(a, 2).geq(1)) return;
    ProjInjFlags flags = proj_inj_flags(a);
    std::vector<int> soc = socle_multiplicities(regular(a));
    for (int j = 0; j < a->vertex_count(); ++j)
        if (soc[j] > 0 && !flags.injective_is_projective[j])
            throw QhError("hull of the regular module escapes the projective-injectives "
                          "despite positive dominant dimension (internal error)");
}

QuiverModule quotient_by_idempotent_trace(const AlgebraPtr& a, const std::vector<int>& verts) {
    QuiverModule A = regular(a);
    if (verts.empty()) return A;
    std::vector<QuiverModule> parts;
    for (int v : verts) parts.push_back(projective(a, v));
    Submodule tr = trace(direct_sum(parts), A);
    return cokernel(tr.inclusion).module;
}

} // namespace

QuiverModule stable_module(const AlgebraPtr& a, int cap) {
    (void)cap;
    check_faithful_part(a->opposite());
    return quotient_by_idempotent_trace(a, projective_injective_vertices_left(a));
}

QuiverModule costable_module(const AlgebraPtr& a, int cap) {
    (void)cap;
    check_faithful_part(a);
    return quotient_by_idempotent_trace(a, projective_injective_vertices_right(a));
}

} // namespace quiverhom
