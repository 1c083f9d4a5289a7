#pragma once

// Small dense linear algebra over exact fields (Rat, CycloNum) and doubles.
// Exact determinants use fraction-free Bareiss elimination; float paths take
// an explicit pivot tolerance.

#include "wfact/cyclo.hpp"
#include "wfact/numeric.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wfact {

inline bool lin_is_zero(const Rat& x) { return x == 0; }
inline bool lin_is_zero(const CycloNum& x) { return x.is_zero(); }

// fraction-free elimination; `one` is the multiplicative identity of F
// (CycloNum identities carry a conductor, so they cannot be built from 1)
template <class F>
F det_bareiss(std::vector<std::vector<F>> a, const F& one) {
    size_t n = a.size();
    if (n == 0) return one;
    bool negate = false;
    F prev = one;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (lin_is_zero(a[k][k])) {
            size_t piv = k + 1;
            while (piv < n && lin_is_zero(a[piv][k])) ++piv;
            if (piv == n) return one - one;
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    F d = a[n - 1][n - 1];
    return negate ? -d : d;
}

template <class F>
long rank_gauss(std::vector<std::vector<F>> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && lin_is_zero(a[piv][c])) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (lin_is_zero(a[i][c])) continue;
            F f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        ++r;
    }
    return static_cast<long>(r);
}

inline long rank_gauss_f(std::vector<std::vector<double>> a, double tol) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        for (size_t i = r + 1; i < rows; ++i)
            if (std::fabs(a[i][c]) > std::fabs(a[piv][c])) piv = i;
        if (std::fabs(a[piv][c]) < tol) continue;
        std::swap(a[r], a[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            double f = a[i][c] / a[r][c];
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return static_cast<long>(r);
}

inline double det_f(std::vector<std::vector<double>> a) {
    size_t n = a.size();
    double d = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::fabs(a[i][k]) > std::fabs(a[piv][k])) piv = i;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            d = -d;
        }
        if (a[k][k] == 0) return 0;
        d *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return d;
}

// unique solution of a square exact system
template <class F>
std::vector<F> solve_square(std::vector<std::vector<F>> a, std::vector<F> b) {
    size_t n = a.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && lin_is_zero(a[piv][c])) ++piv;
        if (piv == n) throw std::invalid_argument("solve_square: singular");
        std::swap(a[c], a[piv]);
        std::swap(b[c], b[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c || lin_is_zero(a[i][c])) continue;
            F f = a[i][c] / a[c][c];
            for (size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
            b[i] = b[i] - f * b[c];
        }
    }
    std::vector<F> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// least-structure rational solve of a possibly overdetermined consistent
// system A x = b with full column rank
inline std::vector<Rat> solve_tall(const std::vector<std::vector<Rat>>& a,
                                   const std::vector<Rat>& b) {
    size_t rows = a.size(), cols = a[0].size();
    // normal equations stay exact over Q and the Gram matrix is invertible
    std::vector<std::vector<Rat>> g(cols, std::vector<Rat>(cols, 0));
    std::vector<Rat> rhs(cols, 0);
    for (size_t i = 0; i < cols; ++i) {
        for (size_t j = 0; j < cols; ++j)
            for (size_t r = 0; r < rows; ++r) g[i][j] += a[r][i] * a[r][j];
        for (size_t r = 0; r < rows; ++r) rhs[i] += a[r][i] * b[r];
    }
    return solve_square(std::move(g), std::move(rhs));
}

} // namespace wfact
