#pragma once

// Canonical roots and coroots for reflections, Grammian determinants over
// exact cyclotomics (wreath path) or rationals/floats (orbit path), and the
// right-hand sides of the factorization count formulas.

#include "wfact/cyclo.hpp"
#include "wfact/lattice.hpp"
#include "wfact/orbit.hpp"
#include "wfact/parabolic.hpp"
#include "wfact/wreath.hpp"

#include <vector>

namespace wfact {

struct RootPair {
    std::vector<CycloNum> root;
    std::vector<CycloNum> coroot;
};

// transposition-like [(ij);k]: rho = corho = e_i - zeta^k e_j;
// diagonal [id; c e_i]: rho = (1 - zeta^c) e_i, corho = e_i.
// Both satisfy <rho, corho> = 1 - xi with xi the non-unit eigenvalue.
RootPair canonical_root(const Reflection& r, const GroupSpec& spec);

CycloNum reflection_eigenvalue(const Reflection& r, const GroupSpec& spec);

// det(<rho_i, corho_j>) with the pairing conjugate-linear in the second
// slot; the empty list gives 1
CycloNum gram_determinant(const std::vector<RootPair>& roots, int conductor);

CycloNum gram_determinant_wreath(const WreathGroup& wg,
                                 const std::vector<int>& refl_indices);

// real orbit groups: corho = 2 rho / <rho, rho>
Rat gram_determinant_orbit_q(const OrbitGroup& og,
                             const std::vector<int>& refl_indices);
double gram_determinant_orbit_f(const OrbitGroup& og,
                                const std::vector<int>& refl_indices);

// Exact right-hand side of the factorization count formula for a pqc
// element of a well generated G(m,p,n): prefactor times the sum over
// relative generating sets of Grammian ratios.
Rat main_theorem_rhs_complex(const WreathGroup& wg, int elem,
                             const PqcClassification& cls,
                             const std::vector<int>& lr);

struct OrbitRhs {
    Rat value;
    long rgs_count = 0;
    // Grammian value of each good/relative generating set, grouped with a
    // float tolerance for reporting
    std::vector<std::pair<double, long>> gram_histogram;
};

// Same formula evaluated on a real orbit group; exact rationals for
// crystallographic presets, floats (sum asserted close to rational) for the
// others. Requires elem pqc.
OrbitRhs main_theorem_rhs_orbit(const OrbitGroup& og, const Lattice& lat,
                                const std::vector<int>& lr, int elem);

// connection index of a crystallographic reflection subgroup, computed as
// |GD| of any minimal generating reflection set
Int connection_index_of_subgroup(const OrbitGroup& og, uint64_t mask);

} // namespace wfact
