#include "quiverhom/field.hpp"

#include <numeric>

namespace quiverhom {

namespace {

using i128 = __int128;

long long checked(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw QhError(std::string("rational overflow in ") + what);
    return static_cast<long long>(v);
}

// num/den with den != 0, reduced and den > 0.
Scalar normalized(i128 num, i128 den, const char* what) {
    if (den == 0) throw QhError("division by zero");
    if (den < 0) { num = -num; den = -den; }
    i128 a = num < 0 ? -num : num, b = den;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a > 1) { num /= a; den /= a; }
    return {checked(num, what), checked(den, what)};
}

long long mod_reduce(i128 v, long long p) {
    long long r = static_cast<long long>(v % p);
    return r < 0 ? r + p : r;
}

long long mod_pow(long long base, long long e, long long p) {
    i128 acc = 1, b = base % p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<long long>(acc);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field Field::prime(long long p) {
    if (!is_prime(p)) throw QhError("GF(p) needs a prime, got " + std::to_string(p));
    return Field(Kind::PrimeField, p);
}

Field Field::parse(const std::string& text) {
    if (text == "Q" || text == "QQ") return rationals();
    if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')')
        return prime(std::stoll(text.substr(3, text.size() - 4)));
    if (text.size() > 1 && text[0] == 'F')
        return prime(std::stoll(text.substr(1)));
    throw QhError("unknown field '" + text + "' (expected Q or GF(p))");
}

Scalar Field::from_int(long long n) const {
    if (kind_ == Kind::PrimeField) return {mod_reduce(n, p_), 1};
    return {n, 1};
}

Scalar Field::from_fraction(long long n, long long d) const {
    if (kind_ == Kind::PrimeField) {
        Scalar dd = from_int(d);
        if (dd.num == 0) throw QhError("fraction denominator vanishes in GF(p)");
        return mul(from_int(n), inv(dd));
    }
    return normalized(n, d, "from_fraction");
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) return {mod_reduce(i128(a.num) + b.num, p_), 1};
    return normalized(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den, "add");
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == Kind::PrimeField) return {a.num == 0 ? 0 : p_ - a.num, 1};
    return {-a.num, a.den};
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) return {mod_reduce(i128(a.num) * b.num, p_), 1};
    return normalized(i128(a.num) * b.num, i128(a.den) * b.den, "mul");
}

Scalar Field::inv(const Scalar& a) const {
    if (a.num == 0) throw QhError("inverse of zero");
    if (kind_ == Kind::PrimeField) return {mod_pow(a.num, p_ - 2, p_), 1};
    return normalized(a.den, a.num, "inv");
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

std::string Field::to_string(const Scalar& a) const {
    if (kind_ == Kind::PrimeField || a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

std::string Field::name() const {
    if (kind_ == Kind::Rationals) return "Q";
    return "GF(" + std::to_string(p_) + ")";
}

} // namespace quiverhom
