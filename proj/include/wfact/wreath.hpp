#pragma once

// Combinatorial model of the groups G(m,p,n): elements [u; a] with u a
// permutation (1-indexed image array) and a a color vector mod m.  The
// matrix convention is w(e_i) = zeta^{a_i} e_{u(i)}, so that
// [u; a] * [v; b] = [uv; v(a) + b].

#include "wfact/group.hpp"
#include "wfact/numeric.hpp"

#include <string>
#include <vector>

namespace wfact {

struct GroupSpec {
    long m = 1, p = 1, n = 1;
    bool valid() const { return m >= 1 && n >= 1 && p >= 1 && m % p == 0; }
    bool well_generated() const { return p == 1 || p == m; }
    long rank() const { return m == 1 ? n - 1 : n; }
    Int order() const { return ipow(m, n) * factorial(n) / p; }
};

struct WreathElement {
    std::vector<int> perm;   // images of 1..n, 1-indexed values
    std::vector<int> colors; // residues mod m

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
    friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

WreathElement wreath_identity(const GroupSpec& spec);
bool is_member(const WreathElement& x, const GroupSpec& spec);
WreathElement multiply(const WreathElement& x, const WreathElement& y,
                       const GroupSpec& spec);
WreathElement inverse(const WreathElement& x, const GroupSpec& spec);

// weight homomorphism: total color mod m
int wt(const WreathElement& x, const GroupSpec& spec);

struct Cycle {
    std::vector<int> support; // 1-indexed, increasing
    int length;
    int color; // sum of colors over the support, mod m
};

struct CycleData {
    std::vector<Cycle> cycles; // by increasing minimal support element
    int total_color;
};

CycleData cycle_data(const WreathElement& x, const GroupSpec& spec);

// pi_{m/r}: G(m,p,n) -> G(r,1,n) for r | m
WreathElement project(const WreathElement& x, const GroupSpec& spec, long r);

struct Reflection {
    bool diagonal;
    int i, j; // 1-indexed; j unused for diagonal reflections
    int k;    // color parameter (nonzero; multiple of p for diagonals)
    int index;
};

// canonical order: transposition-like [(ij);k] by (i,j,k), then diagonal by (i,k)
std::vector<Reflection> reflections_of(const GroupSpec& spec);
WreathElement reflection_element(const Reflection& r, const GroupSpec& spec);

std::string element_to_json(const WreathElement& x);
WreathElement element_from_json(const std::string& text, const GroupSpec& spec);

// Full enumeration of a small G(m,p,n) as a FiniteGroup with canonical
// reflection list; element ids follow the sorted (perm, colors) order.
struct WreathGroup {
    GroupSpec spec;
    FiniteGroup fg;
    std::vector<WreathElement> elems; // id -> element
    std::vector<Reflection> refl_meta;

    int id_of(const WreathElement& x) const;
};

WreathGroup build_wreath_group(const GroupSpec& spec,
                               long element_budget = 1200);

} // namespace wfact
