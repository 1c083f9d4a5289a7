#include "wfact/cyclo.hpp"
#include "wfact/arith.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace wfact {

namespace {

// Exact division of integer polynomials (num / den, remainder must vanish).
std::vector<Int> poly_div_exact(const std::vector<Int>& num,
                                const std::vector<Int>& den) {
    std::vector<Int> r = num;
    const size_t dd = den.size() - 1;
    if (r.size() < den.size()) throw std::logic_error("poly_div_exact: degree");
    std::vector<Int> q(r.size() - dd, 0);
    for (size_t i = r.size(); i-- > dd;) {
        size_t qi = i - dd;
        Int c = r[i] / den[dd]; // den is monic in our usage
        q[qi] = c;
        for (size_t j = 0; j <= dd; ++j) r[qi + j] -= c * den[j];
    }
    for (const Int& c : r)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

struct CycloContext {
    int m;
    int deg;                          // phi(m)
    std::vector<Rat> phi;             // Phi_m over Q, monic, size deg+1
    std::vector<std::vector<Rat>> pw; // pw[k] = x^k mod Phi_m, k = 0..m-1
};

const CycloContext& context(int m) {
    static std::map<int, CycloContext> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    CycloContext ctx;
    ctx.m = m;
    auto phiz = cyclotomic_polynomial(m);
    ctx.deg = static_cast<int>(phiz.size()) - 1;
    ctx.phi.assign(phiz.begin(), phiz.end());
    ctx.pw.resize(m);
    for (int k = 0; k < m; ++k) {
        if (k < ctx.deg) {
            ctx.pw[k].assign(ctx.deg, Rat(0));
            ctx.pw[k][k] = 1;
        } else {
            // x^k = x * x^{k-1}, then reduce the single overflow term
            std::vector<Rat> v(ctx.deg + 1, Rat(0));
            for (int i = 0; i < ctx.deg; ++i) v[i + 1] = ctx.pw[k - 1][i];
            Rat lead = v[ctx.deg];
            std::vector<Rat> red(ctx.deg);
            for (int i = 0; i < ctx.deg; ++i) red[i] = v[i] - lead * ctx.phi[i];
            ctx.pw[k] = std::move(red);
        }
    }
    return cache.emplace(m, std::move(ctx)).first->second;
}

// reduce arbitrary-length coefficient vector modulo Phi_m
std::vector<Rat> reduce_mod_phi(std::vector<Rat> v, const CycloContext& ctx) {
    const int d = ctx.deg;
    for (size_t i = v.size(); i-- > static_cast<size_t>(d);) {
        Rat c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (int j = 0; j < d; ++j) v[i - d + j] -= c * ctx.phi[j];
    }
    v.resize(d, Rat(0));
    return v;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(int m) {
    static std::map<int, std::vector<Int>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto compute = [](auto&& self, int n) -> const std::vector<Int>& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        std::vector<Int> num(n + 1, 0); // x^n - 1
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors_of(n)) {
            if (d == n) continue;
            num = poly_div_exact(num, self(self, static_cast<int>(d)));
        }
        return cache.emplace(n, std::move(num)).first->second;
    };
    return compute(compute, m);
}

int CycloNum::degree_of(int m) {
    return static_cast<int>(euler_phi(m));
}

CycloNum CycloNum::root_power(int m, long k) {
    const auto& ctx = context(m);
    CycloNum r(m);
    long kk = ((k % m) + m) % m;
    r.c_ = ctx.pw[kk];
    return r;
}

bool CycloNum::is_zero() const {
    for (const Rat& q : c_)
        if (q != 0) return false;
    return true;
}

bool CycloNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat CycloNum::to_rational() const {
    if (!is_rational()) throw std::logic_error("CycloNum: not rational");
    return c_[0];
}

std::complex<double> CycloNum::to_complex() const {
    std::complex<double> z = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        double th = 2.0 * std::numbers::pi * static_cast<double>(j) / m_;
        z += c_[j].get_d() * std::complex<double>(std::cos(th), std::sin(th));
    }
    return z;
}

CycloNum CycloNum::conj() const {
    const auto& ctx = context(m_);
    CycloNum r(m_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& rep = ctx.pw[(m_ - static_cast<int>(j)) % m_];
        for (size_t i = 0; i < rep.size(); ++i) r.c_[i] += c_[j] * rep[i];
    }
    return r;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (Rat& q : r.c_) q = -q;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
    if (m_ != o.m_) throw std::logic_error("CycloNum: conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
    if (m_ != o.m_) throw std::logic_error("CycloNum: conductor mismatch");
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) {
    if (m_ != o.m_) throw std::logic_error("CycloNum: conductor mismatch");
    const auto& ctx = context(m_);
    std::vector<Rat> prod(2 * c_.size(), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
    c_ = reduce_mod_phi(std::move(prod), ctx);
    return *this;
}

CycloNum& CycloNum::operator*=(const Rat& q) {
    for (Rat& x : c_) x *= q;
    return *this;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum: inverse of zero");
    const auto& ctx = context(m_);
    // extended Euclid in Q[x]: u * this + v * Phi = gcd (a nonzero constant)
    auto deg = [](const std::vector<Rat>& p) {
        for (size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long>(i);
        return -1L;
    };
    std::vector<Rat> r0 = ctx.phi, r1(c_);
    r1.resize(ctx.deg + 1, Rat(0));
    std::vector<Rat> u0(1, Rat(0)), u1(1, Rat(1)); // coefficients of `this`
    while (deg(r1) > 0) {
        // r0 = q * r1 + r2
        std::vector<Rat> q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rat(0));
        std::vector<Rat> r2 = r0;
        long d1 = deg(r1);
        Rat lead1 = r1[d1];
        for (long i = deg(r2); i >= d1; --i) {
            if (r2[i] == 0) continue;
            Rat f = r2[i] / lead1;
            q[i - d1] = f;
            for (long j = 0; j <= d1; ++j) r2[i - d1 + j] -= f * r1[j];
        }
        // u2 = u0 - q * u1
        std::vector<Rat> u2(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (deg(r1) != 0) throw std::logic_error("CycloNum: inverse failed");
    Rat g = r1[deg(r1)];
    CycloNum inv(m_);
    std::vector<Rat> red = reduce_mod_phi(std::move(u1), ctx);
    for (int i = 0; i < ctx.deg; ++i) inv.c_[i] = red[i] / g;
    return inv;
}

Rat CycloNum::field_trace() const {
    // trace(zeta_m^k) = mu(m/g) * phi(m) / phi(m/g) with g = gcd(k, m)
    Rat t = 0;
    long phim = euler_phi(m_);
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        long g = std::gcd(static_cast<long>(j), static_cast<long>(m_));
        long q = m_ / g;
        t += c_[j] * Rat(mobius_mu(q) * phim / euler_phi(q));
    }
    return t;
}

} // namespace wfact
