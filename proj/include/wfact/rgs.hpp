#pragma once

// Relative generating sets: exhaustive search, the graph characterization
// for the wreath families, counting formulas, and the delta statistic.

#include "wfact/cyclo.hpp"
#include "wfact/group.hpp"
#include "wfact/parabolic.hpp"
#include "wfact/wreath.hpp"

#include <vector>

namespace wfact {

// all size-many reflection subsets S with <S union base> the full group
std::vector<std::vector<int>> enumerate_rgs_sets(
    const FiniteGroup& fg, const std::vector<int>& base, long size);

enum class RelGraphClass { Tree, RootedTree, Unicycle, None };

struct RgsRecord {
    std::vector<int> reflections; // indices, increasing
    CycloNum ratio;               // GD(rho_g) / GD(rho_S union rho_g)
    RelGraphClass graph = RelGraphClass::None;
    int grammian_key = 0; // loop color / delta mod m; 0 for tree cases
};

// search route with exact Grammian ratios attached (wreath groups)
std::vector<RgsRecord> enumerate_rgs(const WreathGroup& wg, int elem,
                                     const std::vector<int>& lr);

// blocks of the partition Pi_g (cycle supports; the fused pair is one block)
std::vector<std::vector<int>> partition_blocks(const WreathElement& g,
                                               const GroupSpec& spec,
                                               const PqcClassification& cls);

struct RelGraphResult {
    RelGraphClass cls = RelGraphClass::None;
    bool has_key = false;
    int key = 0; // loop color (rooted tree) or delta (unicycle), mod m
};

// Colors are reduced relative to g: an edge color is shifted by the
// potential difference of its endpoints along g's color-0 cycles, so that
// reflections in the parabolic closure of g carry reduced color 0.
RelGraphResult relative_graph_classify(const WreathElement& g,
                                       const GroupSpec& spec,
                                       const std::vector<Reflection>& s,
                                       const std::vector<std::vector<int>>& blocks);

// graph-characterization decision, validated against the search route
bool is_rgs_by_graph(const WreathElement& g, const GroupSpec& spec,
                     const PqcClassification& cls,
                     const std::vector<Reflection>& s,
                     const std::vector<std::vector<int>>& blocks);

// counting theorem (three wreath cases plus the m = 1 relative-tree count)
Int count_rgs_formula(const GroupSpec& spec, const PqcClassification& cls);

// (sum of Grammian ratios) / (#RGS * prod of color-0 cycle lengths)
Rat rgs_aggregate_constant(const std::vector<RgsRecord>& records,
                           const PqcClassification& cls);

} // namespace wfact
