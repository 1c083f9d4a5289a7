#include "wfact/rgs.hpp"
#include "wfact/arith.hpp"
#include "wfact/gram.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wfact {

std::vector<std::vector<int>> enumerate_rgs_sets(
    const FiniteGroup& fg, const std::vector<int>& base, long size) {
    int nr = fg.nrefl();
    uint64_t base_mask = 0;
    for (int t : base) base_mask |= uint64_t{1} << t;
    uint64_t full = nr == 64 ? ~uint64_t{0} : (uint64_t{1} << nr) - 1;

    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<long>(pick.size()) == size) {
            uint64_t seed = base_mask;
            for (int t : pick) seed |= uint64_t{1} << t;
            if (closure_mask(fg, seed) == full) out.push_back(pick);
            return;
        }
        for (int t = start; t < nr; ++t) {
            pick.push_back(t);
            self(self, t + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<RgsRecord> enumerate_rgs(const WreathGroup& wg, int elem,
                                     const std::vector<int>& lr) {
    long size = wg.spec.rank() - lr[elem];
    auto fact = canonical_reduced_factorization(wg.fg, lr, elem);
    auto sets = enumerate_rgs_sets(wg.fg, fact, size);

    auto cls = classify_pqc(wg.elems[elem], wg.spec);
    auto blocks = partition_blocks(wg.elems[elem], wg.spec, cls);
    CycloNum numerator = gram_determinant_wreath(wg, fact);
    std::vector<RgsRecord> out;
    out.reserve(sets.size());
    for (auto& s : sets) {
        std::vector<int> combined = s;
        combined.insert(combined.end(), fact.begin(), fact.end());
        RgsRecord rec;
        rec.ratio = numerator / gram_determinant_wreath(wg, combined);
        std::vector<Reflection> refls;
        for (int t : s) refls.push_back(wg.refl_meta[t]);
        auto graph = relative_graph_classify(wg.elems[elem], wg.spec, refls,
                                             blocks);
        rec.graph = graph.cls;
        rec.grammian_key = graph.has_key ? graph.key : 0;
        rec.reflections = std::move(s);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<std::vector<int>> partition_blocks(const WreathElement& g,
                                               const GroupSpec& spec,
                                               const PqcClassification& cls) {
    auto data = cycle_data(g, spec);
    std::vector<std::vector<int>> blocks;
    std::vector<int> fused;
    for (const auto& c : data.cycles) {
        if (cls.tag == PqcCase::WithColorPair && c.color % spec.m != 0) {
            fused.insert(fused.end(), c.support.begin(), c.support.end());
        } else {
            blocks.push_back(c.support);
        }
    }
    if (!fused.empty()) {
        std::sort(fused.begin(), fused.end());
        blocks.push_back(std::move(fused));
        std::sort(blocks.begin(), blocks.end());
    }
    return blocks;
}

namespace {

// potential phi with zeta^{phi(i)} the fixed-vector entry of g's cycle
// through i; only meaningful inside color-0 cycles, 0 elsewhere
std::vector<int> color_potential(const WreathElement& g, const GroupSpec& spec) {
    auto data = cycle_data(g, spec);
    std::vector<int> phi(spec.n, 0);
    for (const auto& c : data.cycles) {
        if (c.color % spec.m != 0) continue;
        int i = c.support.front();
        phi[i - 1] = 0;
        for (int step = 1; step < c.length; ++step) {
            int next = g.perm[i - 1];
            phi[next - 1] = static_cast<int>((phi[i - 1] + g.colors[i - 1]) % spec.m);
            i = next;
        }
    }
    return phi;
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

} // namespace

RelGraphResult relative_graph_classify(const WreathElement& g,
                                       const GroupSpec& spec,
                                       const std::vector<Reflection>& s,
                                       const std::vector<std::vector<int>>& blocks) {
    int m = static_cast<int>(spec.m);
    int nb = static_cast<int>(blocks.size());
    std::vector<int> block_of(spec.n, -1);
    for (int b = 0; b < nb; ++b)
        for (int v : blocks[b]) block_of[v - 1] = b;

    auto phi = color_potential(g, spec);
    auto reduced = [&](const Reflection& r) {
        // edge i -> j carries k - (phi(j) - phi(i)), mod m
        int k = r.k - (phi[r.j - 1] - phi[r.i - 1]);
        return ((k % m) + m) % m;
    };

    RelGraphResult res;
    struct Edge {
        int bu, bv; // oriented bu -> bv as the reflection is written
        int color;
    };
    std::vector<Edge> cross;
    std::vector<Edge> within;
    int loops = 0;
    int loop_color = 0;
    for (const auto& r : s) {
        if (r.diagonal) {
            ++loops;
            loop_color = ((r.k % m) + m) % m;
            continue;
        }
        Edge e{block_of[r.i - 1], block_of[r.j - 1], reduced(r)};
        (e.bu == e.bv ? within : cross).push_back(e);
    }
    if (loops > 1 || within.size() > 1) return res;

    DSU dsu(nb);
    int merges = 0;
    for (const auto& e : cross) merges += dsu.unite(e.bu, e.bv);
    bool spanning_tree = merges == nb - 1 &&
                         static_cast<int>(cross.size()) == nb - 1;
    bool connected_unicycle = merges == nb - 1 &&
                              static_cast<int>(cross.size()) == nb;

    if (spanning_tree) {
        if (loops == 0 && within.empty()) {
            res.cls = RelGraphClass::Tree;
        } else if (loops == 1 && within.empty()) {
            res.cls = RelGraphClass::RootedTree;
            res.has_key = true;
            res.key = loop_color;
        } else if (loops == 0 && within.size() == 1) {
            // the extra edge contracts to a loop; delta is its reduced color
            res.cls = RelGraphClass::Unicycle;
            res.has_key = true;
            res.key = within[0].color;
        }
        return res;
    }

    if (connected_unicycle && loops == 0 && within.empty()) {
        // prune leaves; what remains is the unique cycle
        std::vector<int> deg(nb, 0);
        std::vector<char> alive(cross.size(), 1);
        for (const auto& e : cross) {
            ++deg[e.bu];
            ++deg[e.bv];
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < cross.size(); ++i) {
                if (!alive[i]) continue;
                if (deg[cross[i].bu] == 1 || deg[cross[i].bv] == 1) {
                    alive[i] = 0;
                    --deg[cross[i].bu];
                    --deg[cross[i].bv];
                    changed = true;
                }
            }
        }
        // walk the cycle, summing colors with orientation; start at the
        // smallest cycle block and head toward its smallest neighbor
        int start = -1;
        for (int b = 0; b < nb && start < 0; ++b)
            if (deg[b] > 0) start = b;
        int cur = start;
        int delta = 0;
        std::vector<char> used(cross.size(), 0);
        bool first_step = true;
        do {
            int pick = -1, best_other = nb;
            for (size_t i = 0; i < cross.size(); ++i) {
                if (!alive[i] || used[i]) continue;
                if (cross[i].bu != cur && cross[i].bv != cur) continue;
                int other = cross[i].bu == cur ? cross[i].bv : cross[i].bu;
                if (!first_step) {
                    pick = static_cast<int>(i);
                    break;
                }
                if (other < best_other) {
                    best_other = other;
                    pick = static_cast<int>(i);
                }
            }
            first_step = false;
            if (pick < 0) return res; // disconnected cycle part, not expected
            used[pick] = 1;
            if (cross[pick].bu == cur) {
                delta += cross[pick].color;
                cur = cross[pick].bv;
            } else {
                delta -= cross[pick].color;
                cur = cross[pick].bu;
            }
        } while (cur != start);
        res.cls = RelGraphClass::Unicycle;
        res.has_key = true;
        res.key = ((delta % m) + m) % m;
    }
    return res;
}

bool is_rgs_by_graph(const WreathElement& g, const GroupSpec& spec,
                     const PqcClassification& cls,
                     const std::vector<Reflection>& s,
                     const std::vector<std::vector<int>>& blocks) {
    auto r = relative_graph_classify(g, spec, s, blocks);
    switch (cls.tag) {
        case PqcCase::WithFullCycle:
        case PqcCase::WithColorPair:
            return r.cls == RelGraphClass::Tree;
        case PqcCase::YoungOnly:
            if (spec.m == 1) return r.cls == RelGraphClass::Tree;
            if (spec.p == 1)
                return r.cls == RelGraphClass::RootedTree &&
                       std::gcd(static_cast<long>(r.key), spec.m) == 1;
            return r.cls == RelGraphClass::Unicycle &&
                   std::gcd(static_cast<long>(r.key), spec.m) == 1;
        default:
            throw std::invalid_argument("is_rgs_by_graph: not pqc");
    }
}

Int count_rgs_formula(const GroupSpec& spec, const PqcClassification& cls) {
    long m = spec.m, n = spec.n;
    long k = static_cast<long>(cls.lambda.size());
    Int prod_lambda = 1;
    for (long part : cls.lambda) prod_lambda *= part;

    Rat count;
    switch (cls.tag) {
        case PqcCase::WithFullCycle:
        case PqcCase::WithColorPair:
            // tree on the k color-0 blocks plus the colored block
            count = frac(ipow(m, k) * prod_lambda * cls.lambda0, 1) *
                    rpow(n, k - 1);
            break;
        case PqcCase::YoungOnly:
            if (m == 1) {
                count = frac(prod_lambda, 1) * rpow(n, k - 2);
            } else if (spec.p == 1) {
                count = frac(euler_phi(m) * ipow(m, k - 1) * prod_lambda, 1) *
                        rpow(n, k - 1);
            } else {
                // elementary symmetric polynomials of the parts
                std::vector<Int> e(k + 1);
                e[0] = 1;
                for (long part : cls.lambda)
                    for (long j = k; j >= 1; --j) e[j] += e[j - 1] * part;
                Int bracket = ipow(n, k) - ipow(n, k - 1);
                for (long j = 2; j <= k; ++j)
                    bracket -= factorial(j - 2) * ipow(n, k - j) * e[j];
                count = frac(euler_phi(m) * ipow(m, k - 1) * prod_lambda * bracket, 2);
            }
            break;
        default:
            throw std::invalid_argument("count_rgs_formula: not pqc");
    }
    if (!is_integer(count))
        throw std::logic_error("count_rgs_formula: non-integer count");
    return to_integer(count);
}

Rat rgs_aggregate_constant(const std::vector<RgsRecord>& records,
                           const PqcClassification& cls) {
    if (records.empty()) throw std::invalid_argument("rgs_aggregate_constant: empty");
    CycloNum sum = records[0].ratio;
    for (size_t i = 1; i < records.size(); ++i) sum += records[i].ratio;
    if (!sum.is_rational())
        throw std::logic_error("rgs_aggregate_constant: irrational sum");
    Int denom = static_cast<long>(records.size());
    for (long part : cls.lambda) denom *= part;
    return sum.to_rational() / frac(denom, 1);
}

} // namespace wfact
