#include "wfact/parabolic.hpp"
#include "wfact/cyclo.hpp"
#include "wfact/forms.hpp"
#include "wfact/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wfact {

namespace {

WreathElement cycle_factor(const WreathElement& g, const GroupSpec& spec,
                           const std::vector<int>& support) {
    WreathElement f = wreath_identity(spec);
    for (int i : support) {
        f.perm[i - 1] = g.perm[i - 1];
        f.colors[i - 1] = g.colors[i - 1];
    }
    return f;
}

} // namespace

PqcClassification classify_pqc(const WreathElement& g, const GroupSpec& spec) {
    if (!spec.well_generated())
        throw std::invalid_argument("classify_pqc: group not well generated");

    auto data = cycle_data(g, spec);
    std::vector<const Cycle*> zero, colored;
    for (const auto& c : data.cycles)
        (c.color == 0 ? zero : colored).push_back(&c);

    PqcClassification cls;
    for (const auto* c : zero) cls.lambda.push_back(c->length);
    std::sort(cls.lambda.rbegin(), cls.lambda.rend());

    long zero_count = static_cast<long>(zero.size());

    if (colored.empty()) {
        cls.tag = PqcCase::YoungOnly;
        cls.lr = spec.n - zero_count;
        for (const auto& c : data.cycles) {
            if (c.length == 1) continue;
            GeneralizedCycle gc;
            gc.support = c.support;
            gc.factor = cycle_factor(g, spec, c.support);
            gc.length = c.length;
            gc.lr = c.length - 1;
            cls.cycles.push_back(std::move(gc));
        }
        return cls;
    }

    if (spec.m > 1 && spec.p == 1 && colored.size() == 1 &&
        std::gcd(static_cast<long>(colored[0]->color), spec.m) == 1) {
        cls.tag = PqcCase::WithFullCycle;
        cls.lambda0 = colored[0]->length;
        cls.lr = spec.n - zero_count;
        for (const auto& c : data.cycles) {
            if (c.color == 0 && c.length == 1) continue;
            GeneralizedCycle gc;
            gc.support = c.support;
            gc.factor = cycle_factor(g, spec, c.support);
            gc.length = c.length;
            gc.color = c.color;
            gc.colored = c.color != 0;
            gc.lr = c.color != 0 ? c.length : c.length - 1;
            cls.cycles.push_back(std::move(gc));
        }
        return cls;
    }

    if (spec.m > 1 && spec.p == spec.m && colored.size() == 2 &&
        (colored[0]->color + colored[1]->color) % spec.m == 0 &&
        std::gcd(static_cast<long>(colored[0]->color), spec.m) == 1) {
        cls.tag = PqcCase::WithColorPair;
        cls.lambda0 = colored[0]->length + colored[1]->length;
        cls.lr = spec.n - zero_count;
        bool pair_done = false;
        for (const auto& c : data.cycles) {
            if (c.color == 0) {
                if (c.length == 1) continue;
                GeneralizedCycle gc;
                gc.support = c.support;
                gc.factor = cycle_factor(g, spec, c.support);
                gc.length = c.length;
                gc.lr = c.length - 1;
                cls.cycles.push_back(std::move(gc));
            } else if (!pair_done) {
                // both colored cycles fuse into a single factor
                GeneralizedCycle gc;
                gc.support = colored[0]->support;
                gc.support.insert(gc.support.end(), colored[1]->support.begin(),
                                  colored[1]->support.end());
                std::sort(gc.support.begin(), gc.support.end());
                gc.factor = cycle_factor(g, spec, gc.support);
                gc.pair = true;
                gc.length = cls.lambda0;
                gc.lr = cls.lambda0;
                gc.pair_a = colored[0]->length;
                gc.pair_b = colored[1]->length;
                gc.pair_color = colored[0]->color;
                cls.cycles.push_back(std::move(gc));
                pair_done = true;
            }
        }
        return cls;
    }

    cls.tag = PqcCase::NotPqc;
    return cls;
}

PqcClassification identity_classification(long n) {
    PqcClassification cls;
    cls.tag = PqcCase::YoungOnly;
    cls.lambda.assign(n, 1);
    cls.lr = 0;
    return cls;
}

long reflection_length_formula(const GroupSpec&, const PqcClassification& cls) {
    if (cls.tag == PqcCase::NotPqc)
        throw std::invalid_argument("reflection_length_formula: not pqc");
    return cls.lr;
}

Int fred_factor(const GroupSpec& spec, const GeneralizedCycle& cyc) {
    if (cyc.pair) return fred_pair(spec.m, cyc.pair_a, cyc.pair_b);
    if (cyc.colored) return fred_full_cycle(cyc.length);
    return fred_sym_cycle(cyc.length);
}

Int fred_formula(const GroupSpec& spec, const PqcClassification& cls) {
    if (cls.tag == PqcCase::NotPqc)
        throw std::invalid_argument("fred_formula: not pqc");
    std::vector<long> parts;
    Int prod = 1;
    for (const auto& cyc : cls.cycles) {
        parts.push_back(cyc.lr);
        prod *= fred_factor(spec, cyc);
    }
    return multinomial(parts) * prod;
}

Rat main_theorem_prefactor(const GroupSpec& spec, const PqcClassification& cls,
                           long rank) {
    if (cls.tag == PqcCase::NotPqc)
        throw std::invalid_argument("main_theorem_prefactor: not pqc");
    long ltr = 2 * rank - cls.lr;
    Rat pre(factorial(ltr));
    for (const auto& cyc : cls.cycles)
        pre *= frac(fred_factor(spec, cyc), factorial(cyc.lr));
    return pre;
}

uint64_t parabolic_closure_mask(const WreathGroup& wg, int elem) {
    const GroupSpec& spec = wg.spec;
    const WreathElement& g = wg.elems[elem];
    int m = static_cast<int>(spec.m);

    // one exact fixed-space basis vector per color-0 cycle
    auto data = cycle_data(g, spec);
    std::vector<std::vector<CycloNum>> basis;
    for (const auto& c : data.cycles) {
        if (c.color != 0) continue;
        std::vector<CycloNum> v(spec.n, CycloNum::zero(m));
        int i = c.support.front();
        v[i - 1] = CycloNum::one(m);
        for (int step = 1; step < c.length; ++step) {
            int next = g.perm[i - 1];
            v[next - 1] = CycloNum::root_power(m, g.colors[i - 1]) * v[i - 1];
            i = next;
        }
        basis.push_back(std::move(v));
    }

    uint64_t mask = 0;
    for (const auto& r : wg.refl_meta) {
        WreathElement t = reflection_element(r, spec);
        bool fixes = true;
        for (const auto& v : basis) {
            for (long j = 0; j < spec.n && fixes; ++j) {
                // (t v)_{t(j)} = zeta^{c_j} v_j
                CycloNum image = CycloNum::root_power(m, t.colors[j]) * v[j];
                if (!(image == v[t.perm[j] - 1])) fixes = false;
            }
            if (!fixes) break;
        }
        if (fixes) mask |= uint64_t{1} << r.index;
    }
    return mask;
}

uint64_t parabolic_closure_mask(const OrbitGroup& og, int elem) {
    uint64_t mask = 0;
    if (og.crystallographic) {
        auto mg = og.matrix_q(elem);
        for (int i = 0; i < og.rank; ++i) mg[i][i] -= 1;
        long r0 = rank_gauss(mg);
        for (int t = 0; t < og.fg.nrefl(); ++t) {
            auto mt = og.matrix_q(og.fg.reflections[t]);
            for (int i = 0; i < og.rank; ++i) mt[i][i] -= 1;
            auto stacked = mg;
            stacked.insert(stacked.end(), mt.begin(), mt.end());
            if (rank_gauss(std::move(stacked)) == r0)
                mask |= uint64_t{1} << t;
        }
    } else {
        auto mg = og.matrix_f(elem);
        for (int i = 0; i < og.rank; ++i) mg[i][i] -= 1;
        long r0 = rank_gauss_f(mg, 1e-7);
        for (int t = 0; t < og.fg.nrefl(); ++t) {
            auto mt = og.matrix_f(og.fg.reflections[t]);
            for (int i = 0; i < og.rank; ++i) mt[i][i] -= 1;
            auto stacked = mg;
            stacked.insert(stacked.end(), mt.begin(), mt.end());
            if (rank_gauss_f(std::move(stacked), 1e-7) == r0)
                mask |= uint64_t{1} << t;
        }
    }
    return mask;
}

long reflection_length(const OrbitGroup& og, int elem) {
    return og.rank - fixed_space_dim(og, elem);
}

bool is_pqc_search(const Lattice& lat, int elem, long rank, long lr) {
    auto probe = first_full(lat, elem, 2 * rank);
    return probe.ltr == 2 * rank - lr;
}

bool absolute_leq(const FiniteGroup& fg, const std::vector<int>& lr, int u,
                  int v) {
    return lr[u] + lr[fg.mulx(fg.inv[u], v)] == lr[v];
}

Rat pdet_on_moved_space(const OrbitGroup& og, int elem,
                        const std::vector<int>& factorization) {
    if (!og.crystallographic)
        throw std::invalid_argument("pdet_on_moved_space: need exact roots");
    if (factorization.empty()) return Rat(1);
    size_t r = factorization.size();
    auto m = og.matrix_q(elem);
    for (int i = 0; i < og.rank; ++i) m[i][i] -= 1;

    std::vector<std::vector<Rat>> basis(og.rank, std::vector<Rat>(r));
    for (size_t c = 0; c < r; ++c) {
        const auto& rho = og.coords_q[og.refl_root[factorization[c]]];
        for (int i = 0; i < og.rank; ++i) basis[i][c] = rho[i];
    }
    std::vector<std::vector<Rat>> rest(r, std::vector<Rat>(r));
    for (size_t c = 0; c < r; ++c) {
        std::vector<Rat> image(og.rank, 0);
        for (int i = 0; i < og.rank; ++i)
            for (int k = 0; k < og.rank; ++k)
                image[i] += m[i][k] * basis[k][c];
        auto coords = solve_tall(basis, image);
        for (size_t i = 0; i < r; ++i) rest[i][c] = coords[i];
    }
    Rat d = det_bareiss(std::move(rest), Rat(1));
    return d < 0 ? Rat(-d) : d;
}

} // namespace wfact
