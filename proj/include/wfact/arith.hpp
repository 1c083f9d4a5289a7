#pragma once

// Small arithmetic functions used throughout: totients, Mobius, divisors.

#include "wfact/numeric.hpp"

#include <numeric>
#include <vector>

namespace wfact {

inline std::vector<long> divisors_of(long m) {
    std::vector<long> d;
    for (long r = 1; r * r <= m; ++r) {
        if (m % r == 0) {
            d.push_back(r);
            if (r != m / r) d.push_back(m / r);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

inline long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

inline int mobius_mu(long m) {
    int mu = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            mu = -mu;
        }
    }
    if (m > 1) mu = -mu;
    return mu;
}

// Jordan totient J2(m) = sum_{r | m} mu(m/r) r^2
inline Int jordan_j2(long m) {
    Int s = 0;
    for (long r : divisors_of(m)) s += Int(mobius_mu(m / r)) * Int(r) * Int(r);
    return s;
}

// e_j(lambda) for j = 0..k
inline std::vector<Int> elementary_symmetric(const std::vector<long>& lambda) {
    std::vector<Int> e(lambda.size() + 1, 0);
    e[0] = 1;
    for (long x : lambda)
        for (size_t j = e.size() - 1; j >= 1; --j) e[j] += Int(x) * e[j - 1];
    return e;
}

} // namespace wfact
