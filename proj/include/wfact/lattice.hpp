#pragma once

// Lattice of reflection subgroups of a small ambient group, Mobius
// inversion, transfer-matrix factorization counting, Hurwitz orbits, and
// the factorization generating polynomial for real ambients.

#include "wfact/group.hpp"
#include "wfact/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace wfact {

struct ReflectionSubgroup {
    uint64_t mask = 0; // closed set of ambient reflection indices
    int order = 1;
    std::vector<int> elems;   // sorted ambient element ids
    std::vector<char> member; // indicator over the ambient group
};

struct Lattice {
    const FiniteGroup* fg = nullptr;
    std::vector<ReflectionSubgroup> subs; // sorted by (order, mask)
    int top = -1;                         // index of the full group
    std::vector<Int> mobius_to_top;       // mu(H, W) aligned with subs

    int index_of_mask(uint64_t mask) const;
    // mu(H, subs[upper]) for every H; zero when H is not below upper
    const std::vector<Int>& mobius_below(int upper) const;

private:
    friend Lattice enumerate_lattice(const FiniteGroup&);
    std::map<uint64_t, int> by_mask_;
    mutable std::map<int, std::vector<Int>> mobius_memo_;
};

// All closed reflection subgroups by breadth-first closure. Cached on disk
// when WFACT_CACHE_DIR is set, keyed by a hash of the reflection
// multiplication table.
Lattice enumerate_lattice(const FiniteGroup& fg);

// number of length-ell reflection tuples of sub multiplying to elem
Int count_tuples(const FiniteGroup& fg, const ReflectionSubgroup& sub,
                 int elem, long ell);
// the same for every length 0..max_ell in one dynamic-programming sweep
std::vector<Int> tuple_series(const FiniteGroup& fg,
                              const ReflectionSubgroup& sub, int elem,
                              long max_ell);

// Mobius-inverted counts: tuples whose factors generate subs[upper]
std::vector<Int> full_series_within(const Lattice& lat, int upper, int elem,
                                    long max_ell);
std::vector<Int> full_series(const Lattice& lat, int elem, long max_ell);
Int count_full(const Lattice& lat, int elem, long ell);

struct FirstFull {
    long ltr = -1; // -1 when nothing was found up to the probed bound
    Int value = 0;
};
FirstFull first_full_within(const Lattice& lat, int upper, int elem,
                            long max_ell = -1);
FirstFull first_full(const Lattice& lat, int elem, long max_ell = -1);

// closure of a tuple of reflection indices under the Hurwitz moves
std::vector<std::vector<int>> hurwitz_orbit(const FiniteGroup& fg,
                                            const std::vector<int>& tuple,
                                            long budget = 200000);

std::vector<std::vector<int>> enumerate_reduced_factorizations(
    const FiniteGroup& fg, const std::vector<int>& lr, int elem);

// Coefficients (low degree first) of the monic polynomial Phi with
// exp-generating identity sum_l counts[l] t^l / l! = (1/#W) Phi(e^t)
// (e^t - 1)^ltr / e^(t #refl); real ambient groups only.
std::vector<Rat> phi_polynomial(const Lattice& lat, int elem);

} // namespace wfact
