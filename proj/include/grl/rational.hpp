// Exact rational arithmetic used throughout the library. Backed by GMP so
// Fourier-Motzkin chains never overflow; values are kept canonical-reduced
// with positive denominator (mpq_class invariant).
#pragma once

#include <gmpxx.h>

#include <string>

namespace grl {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace grl
