#include "quiverhom/kupisch_math.hpp"

namespace quiverhom {

KupischCombinatorics::KupischCombinatorics(const KupischSeries& s)
    : series_(s), cyclic_(s.kind == KupischSeries::Kind::Cyclic), n_(s.size()),
      c_(s.entries) {
    s.validate();
    // m_j = max { m >= 1 : the interval of length m with socle j exists },
    // i.e. m <= c_{j-m+1} with a valid start vertex.
    int maxc = 0;
    for (int v : c_) maxc = std::max(maxc, v);
    m_.assign(n_, 0);
    for (int j = 0; j < n_; ++j) {
        int best = 0;
        for (int m = 1; m <= (cyclic_ ? maxc : j + 1); ++m) {
            int start = j - m + 1;
            if (cyclic_) start = ((start % n_) + n_) % n_;
            else if (start < 0) break;
            if (m <= c_[start]) best = m;
        }
        m_[j] = best;
    }
}

int KupischCombinatorics::socle_vertex(const Interval& m) const {
    int s = m.top + m.len - 1;
    return cyclic_ ? s % n_ : s;
}

KupischCombinatorics::Interval KupischCombinatorics::injective_envelope_of_socle(int j) const {
    int start = j - m_[j] + 1;
    if (cyclic_) start = ((start % n_) + n_) % n_;
    return {start, m_[j]};
}

bool KupischCombinatorics::is_injective(const Interval& m) const {
    return m.len == m_[socle_vertex(m)];
}

bool KupischCombinatorics::envelope_is_projective(int j) const {
    Interval env = injective_envelope_of_socle(j);
    return env.len == c_[env.top];
}

bool KupischCombinatorics::is_proj_injective(const Interval& m) const {
    return is_projective(m) && is_injective(m);
}

KupischCombinatorics::Interval KupischCombinatorics::syzygy(const Interval& m) const {
    if (m.len == c_[m.top]) return {0, 0};
    int top = m.top + m.len;
    if (cyclic_) top %= n_;
    return {top, c_[m.top] - m.len};
}

KupischCombinatorics::Interval KupischCombinatorics::cosyzygy(const Interval& m) const {
    int j = socle_vertex(m);
    if (m.len == m_[j]) return {0, 0};
    Interval env = injective_envelope_of_socle(j);
    return {env.top, env.len - m.len};
}

KupischCombinatorics::Interval KupischCombinatorics::ar_translate(const Interval& m) const {
    if (is_projective(m)) return {0, 0};
    return {next(m.top), m.len};
}

ExtendedNat KupischCombinatorics::pdim(const Interval& m0, int cap) const {
    Interval m = m0;
    for (int k = 0; k <= cap; ++k) {
        if (m.len == 0) return ExtendedNat::finite(k == 0 ? 0 : k - 1);
        if (is_projective(m)) return ExtendedNat::finite(k);
        m = syzygy(m);
    }
    return ExtendedNat::at_least(cap);
}

ExtendedNat KupischCombinatorics::idim(const Interval& m0, int cap) const {
    Interval m = m0;
    for (int k = 0; k <= cap; ++k) {
        if (m.len == 0) return ExtendedNat::finite(k == 0 ? 0 : k - 1);
        if (is_injective(m)) return ExtendedNat::finite(k);
        m = cosyzygy(m);
    }
    return ExtendedNat::at_least(cap);
}

ExtendedNat KupischCombinatorics::domdim(const Interval& m0, int cap) const {
    if (m0.len == 0) return ExtendedNat::at_least(cap);
    Interval m = m0;
    for (int k = 0; k <= cap; ++k) {
        int j = socle_vertex(m);
        if (!envelope_is_projective(j)) return ExtendedNat::finite(k);
        if (is_injective(m)) return ExtendedNat::at_least(cap); // chain ends projectively
        m = cosyzygy(m);
    }
    return ExtendedNat::at_least(cap);
}

ExtendedNat KupischCombinatorics::codomdim(const Interval& m0, int cap) const {
    if (m0.len == 0) return ExtendedNat::at_least(cap);
    Interval m = m0;
    for (int k = 0; k <= cap; ++k) {
        Interval cover = {m.top, c_[m.top]};
        if (!is_injective(cover)) return ExtendedNat::finite(k);
        if (is_projective(m)) return ExtendedNat::at_least(cap);
        m = syzygy(m);
    }
    return ExtendedNat::at_least(cap);
}

ExtendedNat KupischCombinatorics::gldim(int cap) const {
    ExtendedNat g = ExtendedNat::finite(0);
    for (int i = 0; i < n_; ++i) g = max_ext(g, pdim({i, 1}, cap));
    return g;
}

ExtendedNat KupischCombinatorics::algebra_domdim(int cap) const {
    ExtendedNat d = ExtendedNat::at_least(cap);
    for (int i = 0; i < n_; ++i) d = min_ext(d, domdim({i, c_[i]}, cap));
    return d;
}

std::optional<int> KupischCombinatorics::equal_gldim_domdim(int cap) const {
    ExtendedNat g = gldim(cap);
    if (!g.is_finite) return std::nullopt;
    ExtendedNat d = algebra_domdim(cap);
    if (g.v == 0) return 0; // semisimple (linear [1])
    if (!d.is_finite || d.v != g.v) return std::nullopt;
    return int(g.v);
}

std::vector<KupischCombinatorics::Interval> KupischCombinatorics::all_intervals() const {
    std::vector<Interval> out;
    for (int i = 0; i < n_; ++i)
        for (int l = 1; l <= c_[i]; ++l) out.push_back({i, l});
    return out;
}

std::vector<KupischCombinatorics::Interval> KupischCombinatorics::injectives() const {
    std::vector<Interval> out;
    for (int j = 0; j < n_; ++j) out.push_back(injective_envelope_of_socle(j));
    return out;
}

ExtendedNat KupischCombinatorics::pdim_tau_g_of_coregular(int g, int cap) const {
    if (g < 1) throw QhError("tau_g needs g >= 1");
    ExtendedNat worst = ExtendedNat::finite(0);
    for (const Interval& inj : injectives()) {
        Interval m = inj;
        for (int k = 0; k < g - 1 && m.len; ++k) m = syzygy(m);
        if (!m.len) continue;
        Interval t = ar_translate(m);
        if (!t.len) continue;
        worst = max_ext(worst, pdim(t, cap));
    }
    return worst;
}

bool KupischCombinatorics::qf1_local_condition() const {
    return !qf1_local_witness().has_value();
}

std::optional<std::pair<int, int>> KupischCombinatorics::qf1_local_witness() const {
    // f ranges over vertices with P(f) = e_f A non-injective, e over vertices
    // whose injective envelope I(e) is non-projective (Ae non-injective as a
    // left module). The witness is a surviving path f -> e, i.e. f A e != 0
    // reading Hom(eA, fA) = fAe.
    std::vector<int> fs, es;
    for (int v = 0; v < n_; ++v) {
        if (!is_injective({v, c_[v]})) fs.push_back(v);
        if (!envelope_is_projective(v)) es.push_back(v);
    }
    for (int e : es)
        for (int f : fs) {
            int len = e - f;
            if (cyclic_) len = ((len % n_) + n_) % n_;
            if (len < 0) continue;
            if (len <= c_[f] - 1) return std::make_pair(e, f);
        }
    return std::nullopt;
}

} // namespace quiverhom
