#pragma once

#include <limits>
#include <string>

#include "umlat/polynomial.hpp"

namespace umlat {

// Sentinel for val(0); the valuation of any nonzero element is far below it.
inline constexpr int kValInfinity = std::numeric_limits<int>::max();

// Element of F_p(t), kept canonical: gcd(num, den) = 1, den monic, zero is 0/1.
// Structural equality is value equality.
struct RationalFunction {
    Poly num;
    Poly den{1};

    bool operator==(const RationalFunction& o) const = default;
    bool is_zero() const { return poly::is_zero(num); }
};

namespace ratfun {

inline RationalFunction canonical(const PrimeField& F, Poly num, Poly den) {
    if (poly::is_zero(den)) throw ArithmeticError("zero denominator");
    if (poly::is_zero(num)) return {};
    Poly g = poly::gcd(F, num, den);
    num = poly::divmod(F, num, g).quot;
    den = poly::divmod(F, den, g).quot;
    int lead_inv = F.inv(den.back());
    num = poly::scale(F, num, lead_inv);
    den = poly::scale(F, den, lead_inv);  // monic
    return {num, den};
}

inline RationalFunction zero() { return {}; }
inline RationalFunction one() { return {poly::one(), poly::one()}; }

inline RationalFunction from_poly(Poly p) { return {std::move(p), poly::one()}; }

// t^k for any integer k
inline RationalFunction t_power(int k) {
    if (k >= 0) return {poly::power_of_t(k), poly::one()};
    return {poly::one(), poly::power_of_t(-k)};
}

inline RationalFunction from_int(const PrimeField& F, long long c) {
    int r = F.reduce(c);
    if (r == 0) return {};
    return {Poly{r}, poly::one()};
}

// t-adic valuation: order of vanishing at t = 0.
inline int val(const RationalFunction& f) {
    if (f.is_zero()) return kValInfinity;
    return poly::ord(f.num) - poly::ord(f.den);
}

inline RationalFunction add(const PrimeField& F, const RationalFunction& a, const RationalFunction& b) {
    Poly n = poly::add(F, poly::mul(F, a.num, b.den), poly::mul(F, b.num, a.den));
    Poly d = poly::mul(F, a.den, b.den);
    return canonical(F, std::move(n), std::move(d));
}

inline RationalFunction neg(const PrimeField& F, const RationalFunction& a) {
    return {poly::neg(F, a.num), a.den};
}

inline RationalFunction sub(const PrimeField& F, const RationalFunction& a, const RationalFunction& b) {
    return add(F, a, neg(F, b));
}

inline RationalFunction mul(const PrimeField& F, const RationalFunction& a, const RationalFunction& b) {
    return canonical(F, poly::mul(F, a.num, b.num), poly::mul(F, a.den, b.den));
}

inline RationalFunction inv(const PrimeField& F, const RationalFunction& a) {
    if (a.is_zero()) throw ArithmeticError("division by zero in F_p(t)");
    return canonical(F, a.den, a.num);
}

inline RationalFunction div(const PrimeField& F, const RationalFunction& a, const RationalFunction& b) {
    return mul(F, a, inv(F, b));
}

// True iff f is a Laurent polynomial (denominator a power of t).
inline bool is_laurent(const RationalFunction& f) {
    for (std::size_t i = 0; i + 1 < f.den.size(); ++i)
        if (f.den[i] != 0) return false;
    return true;
}

// Truncated Laurent expansion: the part of f with exponents < upto.
// f minus the result has valuation >= upto.
inline RationalFunction series_prefix(const PrimeField& F, const RationalFunction& f, int upto) {
    if (f.is_zero()) return {};
    int v = val(f);
    if (v >= upto) return {};
    int terms = upto - v;
    Poly n1 = f.num, d1 = f.den;
    n1.erase(n1.begin(), n1.begin() + poly::ord(n1));
    d1.erase(d1.begin(), d1.begin() + poly::ord(d1));
    Poly g = poly::mul(F, n1, poly::series_inverse(F, d1, terms));
    if (g.size() > static_cast<std::size_t>(terms)) g.resize(static_cast<std::size_t>(terms));
    g = poly::trim(g);
    if (poly::is_zero(g)) return {};
    if (v >= 0) return {poly::shift_up(g, v), poly::one()};
    return canonical(F, std::move(g), poly::power_of_t(-v));
}

// "num/den" with both parts as ascending coefficient lists. Parsing accepts a
// bare "num" (denominator 1); printing always emits both parts.
inline std::string to_string(const RationalFunction& f) {
    return poly::to_string(f.num) + "/" + poly::to_string(f.den);
}

inline RationalFunction parse(const PrimeField& F, const std::string& s) {
    std::size_t pos = 0;
    Poly num = poly::parse(F, s, pos);
    Poly den = poly::one();
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = poly::parse(F, s, pos);
    }
    if (pos != s.size()) throw ValidationError("trailing characters in rational function: " + s);
    return canonical(F, std::move(num), std::move(den));
}

}  // namespace ratfun
}  // namespace umlat
