#include "wfact/verify.hpp"
#include "wfact/forms.hpp"
#include "wfact/gram.hpp"
#include "wfact/lattice.hpp"
#include "wfact/parabolic.hpp"
#include "wfact/rgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfact {

std::vector<int> conjugacy_class_representatives(const FiniteGroup& fg) {
    std::vector<char> seen(fg.order, 0);
    std::vector<int> reps;
    for (int e = 0; e < fg.order; ++e) {
        if (seen[e]) continue;
        reps.push_back(e);
        for (int h = 0; h < fg.order; ++h)
            seen[fg.mulx(fg.mulx(h, e), fg.inv[h])] = 1;
    }
    return reps;
}

namespace {

const char* tag_name(PqcCase tag) {
    switch (tag) {
        case PqcCase::YoungOnly: return "young";
        case PqcCase::WithFullCycle: return "full-cycle";
        case PqcCase::WithColorPair: return "color-pair";
        default: return "not-pqc";
    }
}

Rat ffull_closed_form(const WreathGroup& wg, int elem) {
    const GroupSpec& spec = wg.spec;
    auto data = cycle_data(wg.elems[elem], spec);
    Partition lambda;
    std::vector<long> colors;
    for (const auto& c : data.cycles) {
        lambda.push_back(c.length);
        colors.push_back(c.color);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    if (spec.m == 1) return hurwitz_number(0, lambda);
    if (spec.p == 1)
        return ffull_g_m1n(spec.m, spec.n, lambda, wt(wg.elems[elem], spec));
    return ffull_g_mmn(spec.m, spec.n, lambda, colors);
}

void finish(std::vector<VerificationRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const VerificationRow& a, const VerificationRow& b) {
                         return std::pair(a.lr, a.rep_id) <
                                std::pair(b.lr, b.rep_id);
                     });
}

} // namespace

std::vector<VerificationRow> verify_family(const GroupSpec& spec,
                                           bool all_classes) {
    if (!spec.well_generated())
        throw std::invalid_argument("verify_family: group not well generated");
    auto wg = build_wreath_group(spec);
    auto lr = reflection_length_table(wg.fg);
    auto lat = enumerate_lattice(wg.fg);
    long rank = spec.rank();

    std::vector<int> reps = all_classes
                                ? conjugacy_class_representatives(wg.fg)
                                : std::vector<int>{wg.fg.identity};
    std::vector<VerificationRow> rows;
    for (int e : reps) {
        auto cls = classify_pqc(wg.elems[e], spec);
        if (cls.tag == PqcCase::NotPqc) continue;

        VerificationRow row;
        row.group_id = "G(" + std::to_string(spec.m) + "," +
                       std::to_string(spec.p) + "," + std::to_string(spec.n) +
                       ")";
        row.rep_id = e;
        row.representative = element_to_json(wg.elems[e]);
        row.case_tag = tag_name(cls.tag);
        row.lr = cls.lr;
        row.ltr = 2 * rank - cls.lr;

        row.fred_bruteforce = count_tuples(wg.fg, lat.subs[lat.top], e, cls.lr);
        row.fred_formula = fred_formula(spec, cls);
        auto ff = first_full(lat, e);
        row.ffull_bruteforce = ff.value;
        row.ffull_prop_formula = ffull_closed_form(wg, e);
        row.main_thm_rhs = main_theorem_rhs_complex(wg, e, cls, lr);
        auto fact = canonical_reduced_factorization(wg.fg, lr, e);
        row.rgs_count_search = static_cast<long>(
            enumerate_rgs_sets(wg.fg, fact, rank - cls.lr).size());
        row.rgs_count_formula = count_rgs_formula(spec, cls);

        row.match = cls.lr == lr[e] && ff.ltr == row.ltr &&
                    row.fred_bruteforce == *row.fred_formula &&
                    *row.ffull_prop_formula == Rat(row.ffull_bruteforce) &&
                    *row.main_thm_rhs == Rat(row.ffull_bruteforce) &&
                    row.rgs_count_search == *row.rgs_count_formula;
        rows.push_back(std::move(row));
    }
    finish(rows);
    return rows;
}

std::vector<VerificationRow> verify_preset(const RootDatum& datum,
                                           bool all_classes) {
    auto og = build_orbit_group(datum);
    auto lr = reflection_length_table(og.fg);
    auto lat = enumerate_lattice(og.fg);
    long rank = og.rank;

    std::optional<Int> ambient_index;
    if (og.crystallographic)
        ambient_index =
            connection_index_of_subgroup(og, lat.subs[lat.top].mask);

    std::vector<int> reps = all_classes
                                ? conjugacy_class_representatives(og.fg)
                                : std::vector<int>{og.fg.identity};
    std::vector<VerificationRow> rows;
    for (int e : reps) {
        if (lr[e] != reflection_length(og, e)) continue; // sanity, never fires
        auto ff = first_full(lat, e);
        if (ff.ltr != 2 * rank - lr[e]) continue; // not pqc

        VerificationRow row;
        row.group_id = og.name;
        row.rep_id = e;
        row.representative = "#" + std::to_string(e);
        row.case_tag = "real";
        row.lr = lr[e];
        row.ltr = ff.ltr;
        row.fred_bruteforce = count_tuples(og.fg, lat.subs[lat.top], e, lr[e]);
        row.ffull_bruteforce = ff.value;
        auto rhs = main_theorem_rhs_orbit(og, lat, lr, e);
        row.main_thm_rhs = rhs.value;
        row.rgs_count_search = rhs.rgs_count;

        row.match = *row.main_thm_rhs == Rat(row.ffull_bruteforce);
        if (og.crystallographic) {
            uint64_t wg_mask = parabolic_closure_mask(og, e);
            Int i_par = connection_index_of_subgroup(og, wg_mask);
            row.weyl_rhs = frac(factorial(row.ltr) * row.fred_bruteforce,
                                factorial(row.lr)) *
                           Rat(row.rgs_count_search) *
                           frac(i_par, *ambient_index);
            row.match = row.match && *row.weyl_rhs == Rat(row.ffull_bruteforce);
        }
        rows.push_back(std::move(row));
    }
    finish(rows);
    return rows;
}

} // namespace wfact
