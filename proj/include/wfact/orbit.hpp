#pragma once

// Real reflection groups realized as permutations of their root systems.
// Crystallographic presets carry exact rational root coordinates; H3 and the
// non-crystallographic dihedral presets use floats with a dedup tolerance,
// which is safe because group arithmetic happens on integer permutations.

#include "wfact/group.hpp"
#include "wfact/numeric.hpp"

#include <string>
#include <vector>

namespace wfact {

struct RootDatum {
    std::string name;
    bool crystallographic = false;
    std::vector<std::vector<Rat>> simple_q;    // used when crystallographic
    std::vector<std::vector<double>> simple_f; // used otherwise
};

// A1..A4, B2..B4, D4, I2(m) for 2 <= m <= 12, H3, and F4 (stretch preset).
// I2(3), I2(4), I2(6) resolve to the exact A2/B2/G2 root data.
RootDatum preset_datum(const std::string& name);
RootDatum datum_from_json(const std::string& text); // custom simple roots

struct OrbitGroup {
    std::string name;
    int rank = 0;
    bool crystallographic = false;
    std::vector<std::vector<Rat>> roots_q;    // empty unless crystallographic
    std::vector<std::vector<double>> roots_f; // always populated
    std::vector<int> positive_roots;          // indices, canonical order

    FiniteGroup fg;
    std::vector<std::vector<int>> perms; // element id -> root permutation
    std::vector<int> refl_root;   // reflection list index -> positive root index
    std::vector<int> simple_refl; // reflection list indices of s_1..s_n
    int coxeter_number = 0;

    // coordinates of each root in the simple-root basis
    std::vector<std::vector<Rat>> coords_q;
    std::vector<std::vector<double>> coords_f;

    int id_of_perm(const std::vector<int>& perm) const;
    // matrix of element w in the simple-root basis, columns = images
    std::vector<std::vector<Rat>> matrix_q(int w) const;
    std::vector<std::vector<double>> matrix_f(int w) const;
};

OrbitGroup build_orbit_group(const RootDatum& datum, long element_budget = 1200);

int fixed_space_dim(const OrbitGroup& g, int w);

struct CartanData {
    std::vector<std::vector<Rat>> cartan;
    bool has_index = false;        // false for non-crystallographic input
    Int connection_index = 0;      // |det Cartan|
    std::vector<Int> highest_coeffs; // highest root in the simple-root basis
};

CartanData cartan_and_connection_index(const OrbitGroup& g);

} // namespace wfact
