#pragma once

#include <cstdint>

#include "umlat/errors.hpp"

namespace umlat {

// Arithmetic in F_p for a small prime p. Elements are plain ints in [0, p);
// the field object carries the modulus, values travel bare.
class PrimeField {
  public:
    explicit PrimeField(int p) : p_(p) {
        if (p < 2) throw ValidationError("prime modulus must be >= 2");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ValidationError("modulus is not prime");
        if (p > 97) throw ValidationError("modulus above supported range (p <= 97)");
    }

    int p() const { return p_; }

    int reduce(long long a) const {
        long long r = a % p_;
        return static_cast<int>(r < 0 ? r + p_ : r);
    }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
    int neg(int a) const { return a == 0 ? 0 : p_ - a; }

    int inv(int a) const {
        if (a == 0) throw ArithmeticError("inverse of zero in F_p");
        // extended Euclid on (a, p)
        int t = 0, new_t = 1, r = p_, new_r = a % p_;
        while (new_r != 0) {
            int q = r / new_r;
            int tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return reduce(t);
    }

    int div(int a, int b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  private:
    int p_;
};

}  // namespace umlat
