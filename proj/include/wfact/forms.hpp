#pragma once

// Closed-form counting formulas: classical and genus-1 Hurwitz numbers,
// full/reduced factorization counts for the infinite families, Chebyshev
// helpers, and the primitive-root-of-unity identities.

#include "wfact/numeric.hpp"

#include <vector>

namespace wfact {

// weakly decreasing positive parts
using Partition = std::vector<long>;

long partition_sum(const Partition& lambda);

// Genus-0 / genus-1 Hurwitz numbers (always integer-valued).
Rat hurwitz_number(int genus, const Partition& lambda);

// Minimum-length full factorization counts in G(m,1,n) and G(m,m,n).
// lambda is the full cycle type of the underlying permutation; col is the
// total color (m,1 case), colors are the per-cycle colors (m,m case).
Rat ffull_g_m1n(long m, long n, const Partition& lambda, long col);
Rat ffull_g_mmn(long m, long n, const Partition& lambda,
                const std::vector<long>& colors);

// Reduced factorization counts for quasi-Coxeter elements.
Int fred_sym_cycle(long len);              // cycle in S_len: len^(len-2)
Int fred_full_cycle(long len);             // G(m,1,len) cycle: len^len
Int fred_pair(long m, long a, long b);     // G(m,m,a+b) two-cycle element
Rat fred_coxeter(long h, long n, const Int& group_order);

// Chebyshev polynomials of the first kind, integer coefficients, low first.
std::vector<Int> chebyshev_t(int n);

struct ChebyshevHelper {
    Rat a1, a_deriv1; // a(1), a'(1) for a = (T_{s+1}-T_s)/(x-1)
    Rat b1, b_deriv1; // b(1), b'(1) for b = (T_{s+1}-T_{s-1})/(x-1)
};
ChebyshevHelper chebyshev_helpers(int s);

struct RootIdentityReport {
    long m;
    Rat sum_one_minus;    // sum over primitive xi of 1/(1-xi)
    Rat sum_two_minus;    // sum over primitive xi of 1/(2-xi-conj(xi))
    double float_err_one; // |float sum - exact| / max(1, |exact|)
    double float_err_two;
    bool ok; // exact values match phi(m)/2 and J2(m)/12, floats within 1e-9
};
RootIdentityReport primitive_root_identities(long m);

} // namespace wfact
