#pragma once

// Generic finite group core: multiplication table, canonical reflection
// list, reflection lengths by BFS, and closure of reflection subsets.

#include <cstdint>
#include <vector>

namespace wfact {

struct FiniteGroup {
    int order = 0;
    int identity = 0;
    std::vector<int> mul; // row-major, mul[a * order + b] = a * b
    std::vector<int> inv;
    std::vector<int> reflections; // element ids, canonical order

    int mulx(int a, int b) const { return mul[static_cast<size_t>(a) * order + b]; }
    int nrefl() const { return static_cast<int>(reflections.size()); }
};

// distance from the identity in the right Cayley graph on reflections
std::vector<int> reflection_length_table(const FiniteGroup& g);

struct GeneratedSubgroup {
    std::vector<int> elems;     // sorted element ids
    std::vector<char> member;   // indicator over the ambient group
    uint64_t refl_mask;         // all ambient reflections lying in the subgroup
};

// subgroup generated by the reflections in seed_mask (indices into
// g.reflections); the returned mask is the closure of the seed
GeneratedSubgroup generate_by_reflections(const FiniteGroup& g,
                                          uint64_t seed_mask);

uint64_t closure_mask(const FiniteGroup& g, uint64_t seed_mask);

// smallest-index-first greedy reduced factorization of g as reflection
// indices, using precomputed reflection lengths
std::vector<int> canonical_reduced_factorization(const FiniteGroup& g,
                                                 const std::vector<int>& lr,
                                                 int elem);

} // namespace wfact
