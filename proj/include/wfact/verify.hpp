#pragma once

// Verification matrix: for each conjugacy class, compare every available
// route to the factorization counts (brute-force oracles, closed forms, and
// the two theorem right-hand sides).

#include "wfact/numeric.hpp"
#include "wfact/orbit.hpp"
#include "wfact/wreath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wfact {

struct VerificationRow {
    std::string group_id;
    std::string representative; // element JSON (wreath) or "#id" (orbit)
    std::string case_tag;
    long lr = 0;
    long ltr = 0;
    Int fred_bruteforce;
    std::optional<Int> fred_formula;
    Int ffull_bruteforce;
    std::optional<Rat> ffull_prop_formula;
    std::optional<Rat> main_thm_rhs;
    std::optional<Rat> weyl_rhs; // crystallographic presets only
    Int rgs_count_search;
    std::optional<Int> rgs_count_formula;
    bool match = false;

    int rep_id = 0; // sort key, not serialized
};

// lexicographically smallest member of each conjugacy class, in order
std::vector<int> conjugacy_class_representatives(const FiniteGroup& fg);

// One row per pqc conjugacy class (identity only unless all_classes),
// ordered by (lR, representative).
std::vector<VerificationRow> verify_family(const GroupSpec& spec,
                                           bool all_classes);
std::vector<VerificationRow> verify_preset(const RootDatum& datum,
                                           bool all_classes);

} // namespace wfact
