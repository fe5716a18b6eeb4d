#include "quiverhom/resolution.hpp"

#include <map>

namespace quiverhom {

ProjectiveResolution min_projective_resolution(const QuiverModule& m, int cap) {
    if (cap < 1) throw QhError("resolution cap must be >= 1");
    ProjectiveResolution out;
    out.module = m;
    ProjectiveCover c0 = projective_cover(m);
    out.augmentation = c0.onto;
    Submodule ker = kernel(c0.onto);
    out.terms.push_back(std::move(c0.cover));
    for (int k = 1; k <= cap; ++k) {
        if (ker.total_dim() == 0) { out.complete = true; break; }
        ProjectiveCover ck = projective_cover(ker.module);
        out.maps.push_back(ck.onto.then(ker.inclusion));
        Submodule next = kernel(ck.onto);
        // The kernel of P_k -> ker equals the kernel of P_k -> P_{k-1}.
        out.terms.push_back(std::move(ck.cover));
        ker = std::move(next);
    }
    if (!out.complete && ker.total_dim() == 0) out.complete = true;
    return out;
}

InjectiveCoresolution min_injective_coresolution(const QuiverModule& m, int cap) {
    ProjectiveResolution r = min_projective_resolution(dual(m), cap);
    InjectiveCoresolution out;
    out.module = m;
    out.complete = r.complete;
    for (const StructuredProjective& t : r.terms) {
        out.copies.push_back(t.copies);
        out.terms.push_back(dual(t.mod));
    }
    out.coaugmentation = dual_map(r.augmentation); // D(P_0) <- DD(m) = m
    for (const ModuleMap& d : r.maps) out.maps.push_back(dual_map(d));
    return out;
}

ResolutionChain chain_of(const ProjectiveResolution& r) {
    ResolutionChain c;
    c.kind = ResolutionChain::Kind::Projective;
    for (const StructuredProjective& t : r.terms) {
        c.term_copies.push_back(t.copies);
        c.term_dims.push_back(t.mod.dims());
    }
    c.complete = r.complete;
    return c;
}

ResolutionChain chain_of(const InjectiveCoresolution& r) {
    ResolutionChain c;
    c.kind = ResolutionChain::Kind::Injective;
    c.term_copies = r.copies;
    for (const QuiverModule& t : r.terms) c.term_dims.push_back(t.dims());
    c.complete = r.complete;
    return c;
}

ExtendedNat pdim(const QuiverModule& m, int cap) {
    if (m.total_dim() == 0) return ExtendedNat::finite(0);
    ProjectiveResolution r = min_projective_resolution(m, cap);
    if (!r.complete) return ExtendedNat::at_least(cap);
    return ExtendedNat::finite(r.length());
}

ExtendedNat idim(const QuiverModule& m, int cap) {
    return pdim(dual(m), cap);
}

ExtendedNat domdim(const QuiverModule& m, int cap) {
    if (m.total_dim() == 0) return ExtendedNat::at_least(cap);
    ProjInjFlags flags = proj_inj_flags(m.algebra());
    InjectiveCoresolution r = min_injective_coresolution(m, cap);
    for (size_t k = 0; k < r.copies.size(); ++k)
        for (int j : r.copies[k])
            if (!flags.injective_is_projective[j]) return ExtendedNat::finite((long long)k);
    // Every term inside the cap is projective-injective; when the chain is
    // complete this is the conventionally-infinite case.
    return ExtendedNat::at_least(cap);
}

ExtendedNat codomdim(const QuiverModule& m, int cap) {
    if (m.total_dim() == 0) return ExtendedNat::at_least(cap);
    ProjInjFlags flags = proj_inj_flags(m.algebra());
    ProjectiveResolution r = min_projective_resolution(m, cap);
    for (size_t k = 0; k < r.terms.size(); ++k)
        for (int i : r.terms[k].copies)
            if (!flags.projective_is_injective[i]) return ExtendedNat::finite((long long)k);
    return ExtendedNat::at_least(cap);
}

ExtendedNat gldim(const AlgebraPtr& a, int cap) {
    ExtendedNat g = ExtendedNat::finite(0);
    for (int v = 0; v < a->vertex_count(); ++v)
        g = max_ext(g, pdim(simple(a, v), cap));
    return g;
}

ExtendedNat algebra_domdim(const AlgebraPtr& a, int cap) {
    ExtendedNat d = ExtendedNat::at_least(cap);
    for (int v = 0; v < a->vertex_count(); ++v)
        d = min_ext(d, domdim(projective(a, v), cap));
    return d;
}

namespace {

// Path action matrices of n, memoized per basis path id.
struct PathAction {
    const QuiverModule& n;
    std::map<int, Matrix> memo;

    const Matrix& of(int pid) {
        auto it = memo.find(pid);
        if (it != memo.end()) return it->second;
        const BasisPath& bp = n.algebra()->basis_path(pid);
        Matrix m = n.path_matrix(bp.src, bp.arrows);
        return memo.emplace(pid, std::move(m)).first->second;
    }
};

// Matrix of Hom(P_{k-1}, n) -> Hom(P_k, n), phi |-> phi . d, in Yoneda
// coordinates: Hom(⊕_c P(v_c), n) = ⊕_c n_{v_c}.
Matrix hom_boundary(const StructuredProjective& pk_1, const StructuredProjective& pk,
                    const ModuleMap& d, const QuiverModule& n, PathAction& act) {
    const Field& f = n.algebra()->field();
    std::vector<int> off0(pk_1.copy_count() + 1, 0);
    for (int c = 0; c < pk_1.copy_count(); ++c)
        off0[c + 1] = off0[c] + n.dim(pk_1.copies[c]);
    std::vector<int> off1(pk.copy_count() + 1, 0);
    for (int b = 0; b < pk.copy_count(); ++b)
        off1[b + 1] = off1[b] + n.dim(pk.copies[b]);

    Matrix out(f, off0.back(), off1.back());
    for (int b = 0; b < pk.copy_count(); ++b) {
        int vb = pk.copies[b];
        RowVec dv = d.comps[vb].row(pk.generator_row(b)); // element of (P_{k-1})_{vb}
        // Decompose over (copy a, path p : v_a -> vb).
        for (int a = 0; a < pk_1.copy_count(); ++a) {
            const auto& paths = pk_1.block_paths[a][vb];
            for (size_t t = 0; t < paths.size(); ++t) {
                const Scalar& coef = dv[pk_1.block_offset[a][vb] + int(t)];
                if (f.is_zero(coef)) continue;
                const Matrix& pa = act.of(paths[t]); // n_{v_a} -> n_{vb}
                for (int i = 0; i < pa.rows(); ++i)
                    for (int j = 0; j < pa.cols(); ++j) {
                        const Scalar& s = pa.at(i, j);
                        if (f.is_zero(s)) continue;
                        out.at(off0[a] + i, off1[b] + j) =
                            f.add(out.at(off0[a] + i, off1[b] + j), f.mul(coef, s));
                    }
            }
        }
    }
    return out;
}

} // namespace

std::vector<int> ext_dims_upto(const QuiverModule& m, const QuiverModule& n, int kmax) {
    if (m.algebra() != n.algebra()) throw AlgebraMismatchError();
    if (kmax < 0) throw QhError("ext degree must be >= 0");
    std::vector<int> out(kmax + 1, 0);
    if (m.total_dim() == 0 || n.total_dim() == 0) return out;
    ProjectiveResolution r = min_projective_resolution(m, kmax + 1);
    PathAction act{n, {}};

    auto hom_dim_of = [&](int k) {
        if (k >= int(r.terms.size())) return 0;
        int d = 0;
        for (int v : r.terms[k].copies) d += n.dim(v);
        return d;
    };
    std::vector<int> ranks(kmax + 3, 0); // rank of delta_k: Hom(P_{k-1}) -> Hom(P_k)
    for (int k = 1; k <= kmax + 1; ++k) {
        if (k >= int(r.terms.size())) { ranks[k] = 0; continue; }
        Matrix b = hom_boundary(r.terms[k - 1], r.terms[k], r.maps[k - 1], n, act);
        ranks[k] = rref(b).rank();
    }
    for (int k = 0; k <= kmax; ++k) {
        int dk = hom_dim_of(k);
        out[k] = dk - ranks[k] - ranks[k + 1];
    }
    return out;
}

int ext_dim(const QuiverModule& m, const QuiverModule& n, int k) {
    return ext_dims_upto(m, n, k)[k];
}

int ext_dim_via_coresolution(const QuiverModule& m, const QuiverModule& n, int k) {
    // Ext^k_A(m, n) = Ext^k_{A^op}(D n, D m), computed from the projective
    // resolution of D n, i.e. the injective coresolution of n.
    return ext_dim(dual(n), dual(m), k);
}

} // namespace quiverhom
