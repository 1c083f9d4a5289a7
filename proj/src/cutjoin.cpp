#include "wfact/cutjoin.hpp"
#include "wfact/linalg.hpp"
#include "wfact/parabolic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace wfact {

namespace {

struct SubInfo {
    int rank = 0;
    bool parabolic = false;
};

// rank of the root span and the Steinberg parabolicity test: a reflection
// subgroup is parabolic iff it already contains every ambient reflection
// whose root lies in the span of its own roots
std::vector<SubInfo> analyze_subs(const OrbitGroup& og, const Lattice& lat) {
    int nr = og.fg.nrefl();
    std::vector<SubInfo> info(lat.subs.size());
    for (size_t s = 0; s < lat.subs.size(); ++s) {
        uint64_t mask = lat.subs[s].mask;
        SubInfo si;
        si.parabolic = true;
        if (og.crystallographic) {
            std::vector<std::vector<Rat>> span;
            for (int t = 0; t < nr; ++t)
                if (mask >> t & 1) span.push_back(og.coords_q[og.refl_root[t]]);
            si.rank = static_cast<int>(rank_gauss(span));
            for (int t = 0; t < nr && si.parabolic; ++t) {
                if (mask >> t & 1) continue;
                auto probe = span;
                probe.push_back(og.coords_q[og.refl_root[t]]);
                if (rank_gauss(std::move(probe)) == si.rank) si.parabolic = false;
            }
        } else {
            std::vector<std::vector<double>> span;
            for (int t = 0; t < nr; ++t)
                if (mask >> t & 1) span.push_back(og.coords_f[og.refl_root[t]]);
            si.rank = static_cast<int>(rank_gauss_f(span, 1e-7));
            for (int t = 0; t < nr && si.parabolic; ++t) {
                if (mask >> t & 1) continue;
                auto probe = span;
                probe.push_back(og.coords_f[og.refl_root[t]]);
                if (rank_gauss_f(std::move(probe), 1e-7) == si.rank)
                    si.parabolic = false;
            }
        }
        info[s] = si;
    }
    return info;
}

// greedy reduced factorization using only reflections inside mask; valid
// because reflection length equals fixed-space codimension in real groups
std::vector<int> reduced_fact_within(const FiniteGroup& fg,
                                     const std::vector<int>& lr, uint64_t mask,
                                     int elem) {
    std::vector<int> fact;
    int cur = elem;
    while (lr[cur] > 0) {
        bool advanced = false;
        for (int t = 0; t < fg.nrefl(); ++t) {
            if (!(mask >> t & 1)) continue;
            int next = fg.mulx(cur, fg.inv[fg.reflections[t]]);
            if (lr[next] == lr[cur] - 1) {
                fact.push_back(t);
                cur = next;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("reduced_fact_within: stuck");
    }
    std::reverse(fact.begin(), fact.end());
    return fact;
}

long rgs_count_within(const FiniteGroup& fg, uint64_t mask,
                      const std::vector<int>& base, long size) {
    uint64_t base_mask = 0;
    for (int t : base) base_mask |= uint64_t{1} << t;
    std::vector<int> avail;
    for (int t = 0; t < fg.nrefl(); ++t)
        if (mask >> t & 1) avail.push_back(t);

    long count = 0;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (static_cast<long>(pick.size()) == size) {
            uint64_t seed = base_mask;
            for (int t : pick) seed |= uint64_t{1} << t;
            if (closure_mask(fg, seed) == mask) ++count;
            return;
        }
        for (size_t i = start; i < avail.size(); ++i) {
            pick.push_back(avail[i]);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

// Fred_{W'}(gt) * #RGS(W', gt) * I(W'_{gt}) / I(W')
Rat weighted_term(const OrbitGroup& og, const Lattice& lat,
                  const std::vector<int>& lr, size_t sub_idx, int gt,
                  int sub_rank) {
    const auto& sub = lat.subs[sub_idx];
    Int fred = count_tuples(og.fg, sub, gt, lr[gt]);
    auto fact = reduced_fact_within(og.fg, lr, sub.mask, gt);
    long rgs = rgs_count_within(og.fg, sub.mask, fact, sub_rank - lr[gt]);
    uint64_t closure_gt = parabolic_closure_mask(og, gt) & sub.mask;
    Int i_par = connection_index_of_subgroup(og, closure_gt);
    Int i_sub = connection_index_of_subgroup(og, sub.mask);
    return Rat(fred * rgs) * frac(i_par, i_sub);
}

} // namespace

CutJoinReport cutjoin_rhs(const OrbitGroup& og, const Lattice& lat,
                          const std::vector<int>& lr, int elem) {
    int n = og.rank;
    auto info = analyze_subs(og, lat);
    uint64_t wg_mask = parabolic_closure_mask(og, elem);
    uint64_t full = lat.subs[lat.top].mask;

    CutJoinReport rep;
    rep.value = 0;
    for (int t = 0; t < og.fg.nrefl(); ++t) {
        int gt = og.fg.mulx(elem, og.fg.reflections[t]);
        bool inside = wg_mask >> t & 1;
        for (size_t s = 0; s < lat.subs.size(); ++s) {
            const auto& sub = lat.subs[s];
            if (!sub.member[gt]) continue;
            if (closure_mask(og.fg, sub.mask | uint64_t{1} << t) != full)
                continue;
            if (inside) {
                if (info[s].rank != n - 1 || !info[s].parabolic) continue;
                auto ff = first_full_within(lat, static_cast<int>(s), gt);
                if (ff.ltr != 2 * (n - 1) - lr[gt]) rep.pqc_assertion = false;
                rep.value += ff.value;
                ++rep.first_terms;
            } else {
                if (info[s].rank != n) continue;
                auto ff = first_full_within(lat, static_cast<int>(s), gt);
                if (ff.ltr != 2 * n - lr[gt]) continue; // gt not pqc in W'
                rep.value += ff.value;
                ++rep.second_terms;
            }
        }
    }
    return rep;
}

RgsRecurrenceReport verify_rgs_recurrence(const OrbitGroup& og,
                                          const Lattice& lat,
                                          const std::vector<int>& lr,
                                          int elem) {
    if (!og.crystallographic)
        throw std::invalid_argument("verify_rgs_recurrence: need exact roots");
    int n = og.rank;
    auto info = analyze_subs(og, lat);
    uint64_t wg_mask = parabolic_closure_mask(og, elem);
    uint64_t full = lat.subs[lat.top].mask;

    RgsRecurrenceReport rep;
    long ltr = 2 * n - lr[elem];
    rep.lhs = Rat(ltr) *
              weighted_term(og, lat, lr, static_cast<size_t>(lat.top), elem, n);

    Rat first = 0, second = 0;
    for (int t = 0; t < og.fg.nrefl(); ++t) {
        int gt = og.fg.mulx(elem, og.fg.reflections[t]);
        bool inside = wg_mask >> t & 1;
        for (size_t s = 0; s < lat.subs.size(); ++s) {
            const auto& sub = lat.subs[s];
            if (!sub.member[gt]) continue;
            if (closure_mask(og.fg, sub.mask | uint64_t{1} << t) != full)
                continue;
            if (inside) {
                if (info[s].rank != n - 1 || !info[s].parabolic) continue;
                first += weighted_term(og, lat, lr, s, gt, n - 1);
            } else {
                if (info[s].rank != n) continue;
                auto ff = first_full_within(lat, static_cast<int>(s), gt);
                if (ff.ltr != 2 * n - lr[gt]) continue;
                second += weighted_term(og, lat, lr, s, gt, n);
            }
        }
    }
    rep.rhs = Rat(lr[elem]) * first + frac(1, lr[elem] + 1) * second;
    rep.ok = rep.lhs == rep.rhs;
    return rep;
}

PrefixPoset prefix_poset(const OrbitGroup& og, const Lattice& lat,
                         const std::vector<int>& lr) {
    int n = og.rank;
    auto info = analyze_subs(og, lat);
    long depth = 2 * n;

    using Key = std::pair<int, uint64_t>; // (element, subgroup mask)
    std::vector<std::map<Key, int>> level(depth + 1);
    level[0][{og.fg.identity, 0}] = 0;
    std::vector<std::vector<std::pair<Key, Key>>> edges(depth);

    for (long i = 0; i < depth; ++i) {
        for (const auto& [key, _] : level[i]) {
            auto [g, mask] = key;
            for (int t = 0; t < og.fg.nrefl(); ++t) {
                int g2 = og.fg.mulx(g, og.fg.reflections[t]);
                uint64_t m2 = closure_mask(og.fg, mask | uint64_t{1} << t);
                int rank2 = info[lat.index_of_mask(m2)].rank;
                // the prefix invariant characterizes valid nodes
                if (2 * rank2 - lr[g2] != i + 1) continue;
                level[i + 1].insert({{g2, m2}, 0});
                edges[i].push_back({key, {g2, m2}});
            }
        }
    }

    // keep only nodes on a path to the full identity factorization
    uint64_t full = lat.subs[lat.top].mask;
    std::vector<std::map<Key, char>> alive(depth + 1);
    if (level[depth].count({og.fg.identity, full}))
        alive[depth][{og.fg.identity, full}] = 1;
    for (long i = depth - 1; i >= 0; --i)
        for (const auto& [lo, hi] : edges[i])
            if (alive[i + 1].count(hi)) alive[i][lo] = 1;

    PrefixPoset poset;
    std::map<std::pair<int, Key>, int> index;
    for (long i = 0; i <= depth; ++i)
        for (const auto& [key, _] : alive[i]) {
            index[{static_cast<int>(i), key}] =
                static_cast<int>(poset.nodes.size());
            poset.nodes.push_back({key.first, key.second, static_cast<int>(i)});
        }
    for (long i = 0; i < depth; ++i)
        for (const auto& [lo, hi] : edges[i]) {
            if (!alive[i].count(lo) || !alive[i + 1].count(hi)) continue;
            poset.covers.push_back({index[{static_cast<int>(i), lo}],
                                    index[{static_cast<int>(i + 1), hi}]});
        }
    std::sort(poset.covers.begin(), poset.covers.end());
    poset.covers.erase(std::unique(poset.covers.begin(), poset.covers.end()),
                       poset.covers.end());

    // maximal chains = paths counted with edge multiplicity
    std::vector<Int> paths(poset.nodes.size(), 0);
    if (!poset.nodes.empty()) paths[0] = 1;
    std::map<std::pair<int, int>, Int> multiplicity;
    for (long i = 0; i < depth; ++i)
        for (const auto& [lo, hi] : edges[i]) {
            if (!alive[i].count(lo) || !alive[i + 1].count(hi)) continue;
            multiplicity[{index[{static_cast<int>(i), lo}],
                          index[{static_cast<int>(i + 1), hi}]}] += 1;
        }
    for (const auto& [edge, mult] : multiplicity)
        paths[edge.second] += paths[edge.first] * mult;
    poset.maximal_chains = poset.nodes.empty() ? Int(0) : paths.back();
    if (depth == 0) poset.maximal_chains = 1;
    return poset;
}

std::string poset_dot(const PrefixPoset& p) {
    std::ostringstream out;
    out << "digraph prefix_poset {\n  rankdir=BT;\n";
    int max_rank = 0;
    for (const auto& nd : p.nodes) max_rank = std::max(max_rank, nd.rank);
    for (int r = 0; r <= max_rank; ++r) {
        out << "  { rank=same;";
        for (size_t i = 0; i < p.nodes.size(); ++i)
            if (p.nodes[i].rank == r) out << " n" << i << ";";
        out << " }\n";
    }
    for (size_t i = 0; i < p.nodes.size(); ++i)
        out << "  n" << i << " [label=\"" << p.nodes[i].elem << " / "
            << p.nodes[i].mask << "\"];\n";
    for (const auto& [lo, hi] : p.covers)
        out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace wfact
