#include "wfact/forms.hpp"
#include "wfact/arith.hpp"
#include "wfact/cyclo.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace wfact {

long partition_sum(const Partition& lambda) {
    long n = 0;
    for (long p : lambda) n += p;
    return n;
}

namespace {

// prod lambda_i^{lambda_i} / (lambda_i - 1)!
Rat cycle_weight(const Partition& lambda) {
    Rat w = 1;
    for (long p : lambda) w *= frac(ipow(p, p), factorial(p - 1));
    return w;
}

} // namespace

Rat hurwitz_number(int genus, const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("hurwitz_number: empty");
    long n = partition_sum(lambda);
    long k = static_cast<long>(lambda.size());
    if (genus == 0)
        return Rat(factorial(n + k - 2)) * rpow(n, k - 3) * cycle_weight(lambda);
    if (genus == 1) {
        auto e = elementary_symmetric(lambda);
        Int poly = ipow(n, k) - ipow(n, k - 1);
        for (long i = 2; i <= k; ++i)
            poly -= factorial(i - 2) * e[i] * ipow(n, k - i);
        return frac(factorial(n + k), 24) * cycle_weight(lambda) * Rat(poly);
    }
    throw std::invalid_argument("hurwitz_number: genus must be 0 or 1");
}

Rat ffull_g_m1n(long m, long n, const Partition& lambda, long col) {
    if (m <= 1) throw std::invalid_argument("ffull_g_m1n: need m > 1");
    long k = static_cast<long>(lambda.size());
    long a = std::gcd(((col % m) + m) % m, m);
    if (a == 0) a = m;
    Rat h0 = hurwitz_number(0, lambda);
    if (a == 1) return Rat(n * (n + k - 1)) * Rat(ipow(m, k - 1)) * h0;
    return Rat(n * n * (n + k) * (n + k - 1)) * frac(ipow(m, k), 2) *
           frac(euler_phi(a), a) * h0;
}

Rat ffull_g_mmn(long m, long n, const Partition& lambda,
                const std::vector<long>& colors) {
    if (m <= 1) throw std::invalid_argument("ffull_g_mmn: need m > 1");
    long k = static_cast<long>(lambda.size());
    long d = m;
    for (long c : colors) d = std::gcd(d, ((c % m) + m) % m);
    if (d == 0) d = m;
    if (d == 1) return Rat(ipow(m, k - 1)) * hurwitz_number(0, lambda);
    return Rat(ipow(m, k + 1)) * frac(jordan_j2(d), Int(d) * d) *
           hurwitz_number(1, lambda);
}

Int fred_sym_cycle(long len) {
    if (len == 1) return 1;
    return ipow(len, len - 2);
}

Int fred_full_cycle(long len) { return ipow(len, len); }

Int fred_pair(long m, long a, long b) {
    long nu = a + b;
    Int mult;
    mpz_bin_uiui(mult.get_mpz_t(), static_cast<unsigned long>(nu - 2),
                 static_cast<unsigned long>(a - 1));
    return Int(m) * (nu - 1) * mult * ipow(a, a) * ipow(b, b);
}

Rat fred_coxeter(long h, long n, const Int& group_order) {
    return frac(ipow(h, n) * factorial(n), group_order);
}

std::vector<Int> chebyshev_t(int n) {
    std::vector<Int> t0{1}, t1{0, 1};
    if (n == 0) return t0;
    for (int i = 1; i < n; ++i) {
        std::vector<Int> t2(t1.size() + 1, 0);
        for (size_t j = 0; j < t1.size(); ++j) t2[j + 1] = 2 * t1[j];
        for (size_t j = 0; j < t0.size(); ++j) t2[j] -= t0[j];
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

namespace {

// exact division by (x - 1); remainder must vanish
std::vector<Int> divide_by_x_minus_1(std::vector<Int> p) {
    std::vector<Int> q(p.size() - 1);
    for (size_t i = p.size() - 1; i >= 1; --i) {
        q[i - 1] = p[i];
        p[i - 1] += p[i];
    }
    if (p[0] != 0) throw std::logic_error("divide_by_x_minus_1: remainder");
    return q;
}

Rat eval_at_1(const std::vector<Int>& p) {
    Int s = 0;
    for (const Int& c : p) s += c;
    return Rat(s);
}

Rat deriv_at_1(const std::vector<Int>& p) {
    Int s = 0;
    for (size_t i = 1; i < p.size(); ++i) s += Int(i) * p[i];
    return Rat(s);
}

std::vector<Int> poly_sub(std::vector<Int> a, const std::vector<Int>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

} // namespace

ChebyshevHelper chebyshev_helpers(int s) {
    auto a = divide_by_x_minus_1(poly_sub(chebyshev_t(s + 1), chebyshev_t(s)));
    auto b =
        divide_by_x_minus_1(poly_sub(chebyshev_t(s + 1), chebyshev_t(s - 1)));
    return ChebyshevHelper{eval_at_1(a), deriv_at_1(a), eval_at_1(b),
                           deriv_at_1(b)};
}

RootIdentityReport primitive_root_identities(long m) {
    int mi = static_cast<int>(m);
    // The primitive m-th roots are the Galois conjugates of zeta_m, so both
    // sums are field traces of a single inverted element.
    CycloNum zeta = CycloNum::root_power(mi, 1);
    CycloNum one = CycloNum::one(mi);
    Rat s1 = (one - zeta).inverse().field_trace();
    CycloNum two_minus = one + one - zeta - CycloNum::root_power(mi, -1);
    Rat s2 = two_minus.inverse().field_trace();

    double f1 = 0, f2 = 0;
    for (long j = 1; j < m; ++j) {
        if (std::gcd(j, m) != 1) continue;
        auto xi = CycloNum::root_power(mi, j).to_complex();
        f1 += (1.0 / (1.0 - xi)).real();
        f2 += 1.0 / (2.0 - 2.0 * xi.real());
    }

    RootIdentityReport rep;
    rep.m = m;
    rep.sum_one_minus = s1;
    rep.sum_two_minus = s2;
    // relative error: the sums themselves grow like phi(m) and J2(m)
    rep.float_err_one =
        std::abs(f1 - s1.get_d()) / std::max(1.0, std::abs(s1.get_d()));
    rep.float_err_two =
        std::abs(f2 - s2.get_d()) / std::max(1.0, std::abs(s2.get_d()));
    rep.ok = s1 == frac(euler_phi(m), 2) && s2 == frac(jordan_j2(m), 12) &&
             rep.float_err_one < 1e-9 && rep.float_err_two < 1e-9;
    return rep;
}

} // namespace wfact
