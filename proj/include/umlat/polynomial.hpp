#pragma once

#include <string>
#include <vector>

#include "umlat/prime_field.hpp"

namespace umlat {

// Polynomials over F_p as ascending coefficient vectors. Canonical form has
// no trailing zero coefficient; the zero polynomial is the empty vector.
using Poly = std::vector<int>;

namespace poly {

inline Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline bool is_zero(const Poly& a) { return a.empty(); }

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

// Order of vanishing at t = 0; only valid for nonzero input.
inline int ord(const Poly& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i);
    throw ArithmeticError("ord of zero polynomial");
}

inline Poly from_ints(const PrimeField& F, const std::vector<long long>& coeffs) {
    Poly a(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = F.reduce(coeffs[i]);
    return trim(a);
}

inline Poly one() { return Poly{1}; }

// t^k for k >= 0
inline Poly power_of_t(int k) {
    Poly a(static_cast<std::size_t>(k) + 1, 0);
    a.back() = 1;
    return a;
}

inline Poly add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        int s = 0;
        if (i < a.size()) s = F.add(s, a[i]);
        if (i < b.size()) s = F.add(s, b[i]);
        r[i] = s;
    }
    return trim(r);
}

inline Poly neg(const PrimeField& F, const Poly& a) {
    Poly r(a);
    for (int& c : r) c = F.neg(c);
    return r;
}

inline Poly sub(const PrimeField& F, const Poly& a, const Poly& b) { return add(F, a, neg(F, b)); }

inline Poly mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    return trim(r);
}

inline Poly scale(const PrimeField& F, const Poly& a, int c) {
    Poly r(a);
    for (int& x : r) x = F.mul(x, c);
    return trim(r);
}

// multiply by t^k, k >= 0
inline Poly shift_up(const Poly& a, int k) {
    if (is_zero(a)) return {};
    Poly r(a.size() + static_cast<std::size_t>(k), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

struct DivMod {
    Poly quot;
    Poly rem;
};

inline DivMod divmod(const PrimeField& F, Poly a, const Poly& b) {
    if (is_zero(b)) throw ArithmeticError("polynomial division by zero");
    Poly q;
    int db = degree(b);
    int lead_inv = F.inv(b.back());
    while (!is_zero(a) && degree(a) >= db) {
        int k = degree(a) - db;
        int c = F.mul(a.back(), lead_inv);
        if (static_cast<int>(q.size()) < k + 1) q.resize(k + 1, 0);
        q[k] = F.add(q[k], c);
        for (int i = 0; i <= db; ++i)
            a[i + k] = F.sub(a[i + k], F.mul(c, b[i]));
        a = trim(a);
    }
    return {trim(q), a};
}

inline Poly make_monic(const PrimeField& F, const Poly& a) {
    if (is_zero(a)) return a;
    return scale(F, a, F.inv(a.back()));
}

// monic gcd
inline Poly gcd(const PrimeField& F, Poly a, Poly b) {
    while (!is_zero(b)) {
        Poly r = divmod(F, a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

// Inverse of a as a power series mod t^m; requires a(0) != 0.
inline Poly series_inverse(const PrimeField& F, const Poly& a, int m) {
    if (is_zero(a) || a[0] == 0) throw ArithmeticError("series inverse needs a unit constant term");
    Poly r{F.inv(a[0])};
    for (int len = 1; len < m;) {
        len = std::min(2 * len, m);
        // r <- r (2 - a r) mod t^len
        Poly ar = mul(F, a, r);
        if (ar.size() > static_cast<std::size_t>(len)) ar.resize(len);
        Poly two_minus = neg(F, ar);
        if (two_minus.empty()) two_minus.resize(1, 0);
        two_minus[0] = F.add(two_minus[0], F.add(1, 1));
        r = mul(F, r, trim(two_minus));
        if (r.size() > static_cast<std::size_t>(len)) r.resize(static_cast<std::size_t>(len));
        r = trim(r);
    }
    if (r.size() > static_cast<std::size_t>(m)) r.resize(static_cast<std::size_t>(m));
    return trim(r);
}

// "[c0,c1,...]" with decimal coefficients; "[]" is the zero polynomial.
inline std::string to_string(const Poly& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a[i]);
    }
    s += ']';
    return s;
}

inline Poly parse(const PrimeField& F, const std::string& s, std::size_t& pos) {
    auto fail = [&]() { throw ValidationError("bad polynomial literal: " + s); };
    if (pos >= s.size() || s[pos] != '[') fail();
    ++pos;
    std::vector<long long> cs;
    while (pos < s.size() && s[pos] != ']') {
        bool neg_sign = false;
        if (s[pos] == '-') {
            neg_sign = true;
            ++pos;
        } else if (s[pos] == '+') {
            ++pos;
        }
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) fail();
        long long v = 0;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        cs.push_back(neg_sign ? -v : v);
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    if (pos >= s.size() || s[pos] != ']') fail();
    ++pos;
    return from_ints(F, cs);
}

inline Poly parse(const PrimeField& F, const std::string& s) {
    std::size_t pos = 0;
    Poly a = parse(F, s, pos);
    if (pos != s.size()) throw ValidationError("trailing characters in polynomial literal: " + s);
    return a;
}

}  // namespace poly
}  // namespace umlat
