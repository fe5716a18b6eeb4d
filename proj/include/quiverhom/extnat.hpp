#pragma once

#include <string>

namespace quiverhom {

// A homological dimension: a known natural number, or "at least cap" when the
// bounded computation ran out (possibly infinite). Mirrors bounded calls like
// a global-dimension query with an explicit depth limit.
struct ExtendedNat {
    bool is_finite = true;
    long long v = 0; // value when finite, the cap otherwise

    static ExtendedNat finite(long long k) { return {true, k}; }
    static ExtendedNat at_least(long long cap) { return {false, cap}; }

    bool operator==(const ExtendedNat&) const = default;

    bool finite_eq(long long k) const { return is_finite && v == k; }
    // Certified "<= k": finite values compare, at_least(c) is <= k only never.
    bool leq(long long k) const { return is_finite && v <= k; }
    // Certified ">= k".
    bool geq(long long k) const { return is_finite ? v >= k : this->v >= k; }

    std::string to_string() const {
        return is_finite ? std::to_string(v) : ">=" + std::to_string(v);
    }
};

inline ExtendedNat min_ext(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_finite && b.is_finite) return ExtendedNat::finite(std::min(a.v, b.v));
    if (a.is_finite) return a.v <= b.v ? a : b; // finite below the cap wins
    if (b.is_finite) return b.v <= a.v ? b : a;
    return ExtendedNat::at_least(std::min(a.v, b.v));
}

inline ExtendedNat max_ext(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_finite && b.is_finite) return ExtendedNat::finite(std::max(a.v, b.v));
    if (!a.is_finite) return a;
    return b;
}

} // namespace quiverhom
