#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quiverhom {

struct QhError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact field element. Over GF(p): num is the residue in [0,p), den == 1.
// Over Q: gcd(|num|, den) == 1 and den >= 1. Both invariants are maintained
// by every Field operation, so operator== is plain memberwise comparison.
struct Scalar {
    long long num = 0;
    long long den = 1;

    bool operator==(const Scalar&) const = default;
};

class Field {
public:
    enum class Kind { PrimeField, Rationals };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    static Field prime(long long p);
    // Accepts "Q", "QQ", "GF(p)", "Fp".
    static Field parse(const std::string& text);

    Kind kind() const { return kind_; }
    long long characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
    bool operator==(const Field&) const = default;

    Scalar zero() const { return {0, 1}; }
    Scalar one() const { return from_int(1); }
    Scalar from_int(long long n) const;
    Scalar from_fraction(long long n, long long d) const;

    bool is_zero(const Scalar& a) const { return a.num == 0; }
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;
    std::string name() const;

private:
    Field(Kind k, long long p) : kind_(k), p_(p) {}

    Kind kind_;
    long long p_;
};

} // namespace quiverhom
