#pragma once

// Exact integer/rational arithmetic helpers on top of GMP.

#include <gmpxx.h>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace wfact {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    assert(n >= 0);
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// n! / (k_1! k_2! ... k_r!) with sum(k_i) = n
inline Int multinomial(const std::vector<long>& parts) {
    long n = 0;
    for (long p : parts) n += p;
    Int r = factorial(n);
    for (long p : parts) r /= factorial(p);
    return r;
}

inline Int ipow(const Int& base, long e) {
    assert(e >= 0);
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Int ipow(long base, long e) { return ipow(Int(base), e); }

// base^e for possibly negative e, exact rational
inline Rat rpow(long base, long e) {
    assert(base != 0 || e >= 0);
    if (e >= 0) return Rat(ipow(base, e));
    Rat r(1, ipow(base, -e));
    r.canonicalize();
    return r;
}

// mpq_class(a, b) does not reduce to lowest terms on its own
inline Rat frac(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

inline Int to_integer(const Rat& q) {
    assert(is_integer(q));
    return q.get_num();
}

} // namespace wfact
