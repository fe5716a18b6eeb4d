#pragma once

#include "quiverhom/algebra.hpp"
#include "quiverhom/extnat.hpp"

#include <optional>

namespace quiverhom {

// Pure index arithmetic on Nakayama algebras given by a Kupisch series.
// Interval modules are (top vertex, length) pairs; syzygies, hulls and the
// Auslander-Reiten shift are all interval operations, so every homological
// invariant here is integer bookkeeping. Results agree with the generic
// linear-algebra engine; the scan asserts that agreement on every survivor.
class KupischCombinatorics {
public:
    explicit KupischCombinatorics(const KupischSeries& s);

    int n() const { return n_; }
    bool cyclic() const { return cyclic_; }
    int c(int i) const { return c_[i]; } // 0-based vertex
    const KupischSeries& series() const { return series_; }

    struct Interval {
        int top = 0; // 0-based vertex
        int len = 0; // 0 encodes the zero module
        bool operator==(const Interval&) const = default;
    };

    int next(int v) const { return cyclic_ ? (v + 1) % n_ : v + 1; }
    int socle_vertex(const Interval& m) const; // top + len - 1
    bool is_projective(const Interval& m) const { return m.len == c_[m.top]; }
    bool is_injective(const Interval& m) const;
    Interval injective_envelope_of_socle(int socle) const; // I(socle)
    bool envelope_is_projective(int socle) const;
    bool is_proj_injective(const Interval& m) const;

    Interval syzygy(const Interval& m) const;    // 0 when projective
    Interval cosyzygy(const Interval& m) const;  // 0 when injective
    // tau shifts a non-projective interval one step forward; 0 on projectives.
    Interval ar_translate(const Interval& m) const;

    ExtendedNat pdim(const Interval& m, int cap) const;
    ExtendedNat idim(const Interval& m, int cap) const;
    ExtendedNat domdim(const Interval& m, int cap) const;
    ExtendedNat codomdim(const Interval& m, int cap) const;

    ExtendedNat gldim(int cap) const;
    ExtendedNat algebra_domdim(int cap) const;
    // gldim == domdim == g; nullopt when not higher Auslander (strictly:
    // requires the common value finite; g may be any value >= 0).
    std::optional<int> equal_gldim_domdim(int cap) const;

    std::vector<Interval> all_intervals() const; // sum over i of c_i modules
    std::vector<Interval> injectives() const;    // I(j) for every vertex j

    // max over summands of pdim tau_g(D A); finite only when gldim is.
    ExtendedNat pdim_tau_g_of_coregular(int g, int cap) const;

    // Local QF-1 condition in Kupisch arithmetic: no surviving path from a
    // vertex with non-injective right projective to a vertex with
    // non-injective left projective (Fuller-Tachikawa test).
    bool qf1_local_condition() const;
    std::optional<std::pair<int, int>> qf1_local_witness() const; // (e, f) 0-based

    // m_j: length of I(j), the longest interval with socle j.
    int injective_length(int socle) const { return m_[socle]; }

private:
    KupischSeries series_;
    bool cyclic_;
    int n_;
    std::vector<int> c_;
    std::vector<int> m_;
};

} // namespace quiverhom
