#include "wfact/gram.hpp"
#include "wfact/linalg.hpp"
#include "wfact/rgs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wfact {

RootPair canonical_root(const Reflection& r, const GroupSpec& spec) {
    int m = static_cast<int>(spec.m);
    RootPair rp;
    rp.root.assign(spec.n, CycloNum::zero(m));
    rp.coroot.assign(spec.n, CycloNum::zero(m));
    if (r.diagonal) {
        rp.root[r.i - 1] = CycloNum::one(m) - CycloNum::root_power(m, r.k);
        rp.coroot[r.i - 1] = CycloNum::one(m);
    } else {
        rp.root[r.i - 1] = CycloNum::one(m);
        rp.root[r.j - 1] = -CycloNum::root_power(m, r.k);
        rp.coroot = rp.root;
    }
    return rp;
}

CycloNum reflection_eigenvalue(const Reflection& r, const GroupSpec& spec) {
    int m = static_cast<int>(spec.m);
    if (r.diagonal) return CycloNum::root_power(m, r.k);
    return -CycloNum::one(m);
}

CycloNum gram_determinant(const std::vector<RootPair>& roots, int conductor) {
    size_t k = roots.size();
    if (k == 0) return CycloNum::one(conductor);
    std::vector<std::vector<CycloNum>> gm(
        k, std::vector<CycloNum>(k, CycloNum::zero(conductor)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            CycloNum acc = CycloNum::zero(conductor);
            for (size_t d = 0; d < roots[i].root.size(); ++d)
                acc += roots[i].root[d] * roots[j].coroot[d].conj();
            gm[i][j] = acc;
        }
    return det_bareiss(std::move(gm), CycloNum::one(conductor));
}

CycloNum gram_determinant_wreath(const WreathGroup& wg,
                                 const std::vector<int>& refl_indices) {
    std::vector<RootPair> roots;
    for (int idx : refl_indices)
        roots.push_back(canonical_root(wg.refl_meta[idx], wg.spec));
    return gram_determinant(roots, static_cast<int>(wg.spec.m));
}

namespace {

Rat dot_q(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot_f(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

Rat gram_determinant_orbit_q(const OrbitGroup& og,
                             const std::vector<int>& refl_indices) {
    size_t k = refl_indices.size();
    if (k == 0) return Rat(1);
    std::vector<std::vector<Rat>> gm(k, std::vector<Rat>(k));
    for (size_t i = 0; i < k; ++i) {
        const auto& ri = og.roots_q[og.refl_root[refl_indices[i]]];
        for (size_t j = 0; j < k; ++j) {
            const auto& rj = og.roots_q[og.refl_root[refl_indices[j]]];
            gm[i][j] = Rat(2) * dot_q(ri, rj) / dot_q(rj, rj);
        }
    }
    return det_bareiss(std::move(gm), Rat(1));
}

double gram_determinant_orbit_f(const OrbitGroup& og,
                                const std::vector<int>& refl_indices) {
    size_t k = refl_indices.size();
    if (k == 0) return 1.0;
    std::vector<std::vector<double>> gm(k, std::vector<double>(k));
    for (size_t i = 0; i < k; ++i) {
        const auto& ri = og.roots_f[og.refl_root[refl_indices[i]]];
        for (size_t j = 0; j < k; ++j) {
            const auto& rj = og.roots_f[og.refl_root[refl_indices[j]]];
            gm[i][j] = 2.0 * dot_f(ri, rj) / dot_f(rj, rj);
        }
    }
    return det_f(std::move(gm));
}

Rat main_theorem_rhs_complex(const WreathGroup& wg, int elem,
                             const PqcClassification& cls,
                             const std::vector<int>& lr) {
    if (cls.tag == PqcCase::NotPqc)
        throw std::invalid_argument("main_theorem_rhs_complex: not pqc");
    long rank = wg.spec.rank();
    auto fact = canonical_reduced_factorization(wg.fg, lr, elem);
    auto sets = enumerate_rgs_sets(wg.fg, fact, rank - cls.lr);

    int m = static_cast<int>(wg.spec.m);
    CycloNum numerator = gram_determinant_wreath(wg, fact);
    CycloNum sum = CycloNum::zero(m);
    for (const auto& s : sets) {
        std::vector<int> combined = s;
        combined.insert(combined.end(), fact.begin(), fact.end());
        sum += numerator / gram_determinant_wreath(wg, combined);
    }
    if (!sum.is_rational())
        throw std::logic_error("main_theorem_rhs_complex: irrational sum");
    return main_theorem_prefactor(wg.spec, cls, rank) * sum.to_rational();
}

OrbitRhs main_theorem_rhs_orbit(const OrbitGroup& og, const Lattice& lat,
                                const std::vector<int>& lr, int elem) {
    long rank = og.rank;
    long lrg = lr[elem];
    long ltr = 2 * rank - lrg;
    auto fact = canonical_reduced_factorization(og.fg, lr, elem);
    auto sets = enumerate_rgs_sets(og.fg, fact, rank - lrg);

    OrbitRhs out;
    out.rgs_count = static_cast<long>(sets.size());
    Rat prefactor = frac(factorial(ltr) *
                             count_tuples(og.fg, lat.subs[lat.top], elem, lrg),
                         factorial(lrg));

    auto record = [&out](double key) {
        for (auto& [k, c] : out.gram_histogram)
            if (std::fabs(k - key) < 1e-6) {
                ++c;
                return;
            }
        out.gram_histogram.emplace_back(key, 1);
    };

    if (og.crystallographic) {
        Rat numerator = gram_determinant_orbit_q(og, fact);
        Rat sum = 0;
        for (const auto& s : sets) {
            std::vector<int> combined = s;
            combined.insert(combined.end(), fact.begin(), fact.end());
            Rat gd = gram_determinant_orbit_q(og, combined);
            record(gd.get_d());
            sum += numerator / gd;
        }
        out.value = prefactor * sum;
    } else {
        double numerator = gram_determinant_orbit_f(og, fact);
        double sum = 0;
        for (const auto& s : sets) {
            std::vector<int> combined = s;
            combined.insert(combined.end(), fact.begin(), fact.end());
            double gd = gram_determinant_orbit_f(og, combined);
            record(gd);
            sum += numerator / gd;
        }
        // the full sum is rational even when single Grammians are not
        double scaled = sum * 720.0;
        if (std::fabs(scaled - std::llround(scaled)) > 1e-6 * 720.0)
            throw std::logic_error("main_theorem_rhs_orbit: sum not rational");
        out.value = prefactor * frac(std::llround(scaled), 720);
    }
    std::sort(out.gram_histogram.begin(), out.gram_histogram.end());
    return out;
}

Int connection_index_of_subgroup(const OrbitGroup& og, uint64_t mask) {
    if (!og.crystallographic)
        throw std::invalid_argument("connection_index_of_subgroup: need exact roots");
    std::vector<int> refls;
    for (int t = 0; t < og.fg.nrefl(); ++t)
        if (mask >> t & 1) refls.push_back(t);
    if (refls.empty()) return 1;

    // rank of the subgroup = rank of its root span
    std::vector<std::vector<Rat>> span;
    for (int t : refls) span.push_back(og.coords_q[og.refl_root[t]]);
    long r = rank_gauss(span);

    std::vector<int> pick;
    auto search = [&](auto&& self, size_t start) -> bool {
        if (static_cast<long>(pick.size()) == r) {
            uint64_t seed = 0;
            for (int t : pick) seed |= uint64_t{1} << t;
            return closure_mask(og.fg, seed) == mask;
        }
        for (size_t i = start; i < refls.size(); ++i) {
            pick.push_back(refls[i]);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    if (!search(search, 0))
        throw std::logic_error("connection_index_of_subgroup: no generating set");
    Rat gd = gram_determinant_orbit_q(og, pick);
    if (gd < 0) gd = -gd;
    if (!is_integer(gd))
        throw std::logic_error("connection_index_of_subgroup: non-integer GD");
    return to_integer(gd);
}

} // namespace wfact
