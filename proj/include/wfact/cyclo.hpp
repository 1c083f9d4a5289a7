#pragma once

// Exact arithmetic in the m-th cyclotomic field Q(zeta_m), with elements
// stored as rational polynomials in zeta reduced modulo the m-th cyclotomic
// polynomial Phi_m. Zero tests are exact; conj realizes zeta -> zeta^-1.

#include "wfact/numeric.hpp"

#include <complex>
#include <vector>

namespace wfact {

// Coefficients of Phi_m (monic, integer), low degree first.
std::vector<Int> cyclotomic_polynomial(int m);

class CycloNum {
public:
    CycloNum() : m_(1), c_(1, Rat(0)) {}
    explicit CycloNum(int m) : m_(m), c_(degree_of(m), Rat(0)) {}
    CycloNum(int m, const Rat& q) : CycloNum(m) { c_[0] = q; }

    static CycloNum zero(int m) { return CycloNum(m); }
    static CycloNum one(int m) { return CycloNum(m, Rat(1)); }
    // zeta_m^k
    static CycloNum root_power(int m, long k);

    int conductor() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat to_rational() const; // requires is_rational()
    std::complex<double> to_complex() const;

    CycloNum conj() const;
    CycloNum inverse() const; // requires nonzero

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) {
        return a *= b.inverse();
    }
    friend bool operator==(const CycloNum& a, const CycloNum& b) {
        return (a - b).is_zero();
    }

    CycloNum& operator*=(const Rat& q);
    friend CycloNum operator*(CycloNum a, const Rat& q) { return a *= q; }

    // Trace down to Q: sum of the values under all Galois automorphisms
    // zeta -> zeta^j, gcd(j, m) = 1.
    Rat field_trace() const;

private:
    static int degree_of(int m); // phi(m)
    int m_;
    std::vector<Rat> c_; // length phi(m), basis 1, zeta, ..., zeta^{phi(m)-1}
};

} // namespace wfact
