#pragma once

// Parabolic closures, parabolic quasi-Coxeter classification, generalized
// cycle decompositions, and the reflection/full reflection lengths.

#include "wfact/lattice.hpp"
#include "wfact/orbit.hpp"
#include "wfact/wreath.hpp"

#include <cstdint>
#include <vector>

namespace wfact {

enum class PqcCase { YoungOnly, WithFullCycle, WithColorPair, NotPqc };

struct GeneralizedCycle {
    std::vector<int> support; // 1-indexed, increasing
    WreathElement factor;     // identity outside the support
    long lr = 0;              // reflection length of the factor
    bool colored = false;     // single cycle whose color generates Z/m
    bool pair = false;        // two nonzero-color cycles fused into one factor
    long length = 0;          // cycle length; a+b for the fused pair
    int color = 0;            // cycle color (0 unless colored)
    long pair_a = 0, pair_b = 0; // cycle lengths of the fused pair
    int pair_color = 0;          // color c of the first pair cycle (other is -c)
};

struct PqcClassification {
    PqcCase tag = PqcCase::NotPqc;
    std::vector<long> lambda;  // color-0 cycle lengths, weakly decreasing
    long lambda0 = 0;          // distinguished length (cases ii and iv)
    long lr = -1;              // reflection length (pqc cases)
    std::vector<GeneralizedCycle> cycles; // by increasing minimal support
};

// Combinatorial classification for well generated G(m,p,n).
PqcClassification classify_pqc(const WreathElement& g, const GroupSpec& spec);

// trivial identity classification for a rank-n real group
PqcClassification identity_classification(long n);

long reflection_length_formula(const GroupSpec& spec,
                               const PqcClassification& cls);

// reduced count for one generalized cycle, and the multinomial recombination
Int fred_factor(const GroupSpec& spec, const GeneralizedCycle& cyc);
Int fred_formula(const GroupSpec& spec, const PqcClassification& cls);

// prefactor ltr! * prod fred(g_i) / lR(g_i)! shared by both main-theorem sides
Rat main_theorem_prefactor(const GroupSpec& spec, const PqcClassification& cls,
                           long rank);

// mask of ambient reflections fixing V^g pointwise
uint64_t parabolic_closure_mask(const WreathGroup& wg, int elem);
uint64_t parabolic_closure_mask(const OrbitGroup& og, int elem);

long reflection_length(const OrbitGroup& og, int elem);

// pqc test by the length characterization, using the Mobius oracle for ltr
bool is_pqc_search(const Lattice& lat, int elem, long rank, long lr);

bool absolute_leq(const FiniteGroup& fg, const std::vector<int>& lr, int u,
                  int v);

// |det(g - I)| on the span of the roots of a reduced factorization
// (crystallographic orbit groups)
Rat pdet_on_moved_space(const OrbitGroup& og, int elem,
                        const std::vector<int>& factorization);

} // namespace wfact
