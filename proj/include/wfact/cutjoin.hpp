#pragma once

// Cut-and-join recursion for real groups, the RGS-weighted form of the
// recurrence, and the poset of prefix pairs of minimum-length full identity
// factorizations.

#include "wfact/gram.hpp"
#include "wfact/lattice.hpp"
#include "wfact/orbit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wfact {

struct CutJoinReport {
    Int value;                 // right-hand side of the recursion
    long first_terms = 0;      // contributing (t, W') pairs, t in the closure
    long second_terms = 0;     // contributing pairs with t outside
    bool pqc_assertion = true; // every first-sum W' holds gt as pqc
};

// Evaluates the recursion right-hand side for a pqc element; equals
// count_full(g, ltr(g)) when the recursion holds.
CutJoinReport cutjoin_rhs(const OrbitGroup& og, const Lattice& lat,
                          const std::vector<int>& lr, int elem);

struct RgsRecurrenceReport {
    Rat lhs, rhs;
    bool ok = false;
};

// The RGS/connection-index weighted recurrence; crystallographic presets
// only (connection indices are Cartan determinants).
RgsRecurrenceReport verify_rgs_recurrence(const OrbitGroup& og,
                                          const Lattice& lat,
                                          const std::vector<int>& lr,
                                          int elem);

struct PrefixPoset {
    struct Node {
        int elem = 0;
        uint64_t mask = 0;
        int rank = 0; // poset rank, equals 2 rank(W_i) - lR(g_i)
    };
    std::vector<Node> nodes; // sorted by (rank, elem, mask)
    std::vector<std::pair<int, int>> covers; // (lower, upper) node indices
    Int maximal_chains;
};

// All prefix pairs (g_i, W_i), pruned to those completable to a
// minimum-length full identity factorization.
PrefixPoset prefix_poset(const OrbitGroup& og, const Lattice& lat,
                         const std::vector<int>& lr);

// nodes labeled "element-id / subgroup-mask", one cluster per rank
std::string poset_dot(const PrefixPoset& p);

} // namespace wfact
