#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wfact/cyclo.hpp"
#include "wfact/linalg.hpp"
#include "wfact/wreath.hpp"

#include <numeric>
#include <set>

using namespace wfact;
using testutil::elem;

TEST_CASE("spec basics") {
    GroupSpec g312{3, 1, 2};
    CHECK(g312.valid());
    CHECK(g312.well_generated());
    CHECK(g312.order() == 18);
    CHECK(g312.rank() == 2);
    GroupSpec s4{1, 1, 4};
    CHECK(s4.rank() == 3);
    GroupSpec g422{4, 2, 2};
    CHECK(g422.valid());
    CHECK_FALSE(g422.well_generated());
    CHECK(GroupSpec{4, 3, 2}.valid() == false);
}

TEST_CASE("multiplication examples") {
    GroupSpec g312{3, 1, 2};
    auto x = elem({2, 1}, {1, 0});
    auto y = elem({1, 2}, {2, 0});
    CHECK(multiply(x, y, g312) == elem({2, 1}, {0, 0}));
    CHECK(multiply(wreath_identity(g312), x, g312) == x);
    CHECK(multiply(x, wreath_identity(g312), g312) == x);

    GroupSpec g212{2, 1, 2};
    auto a = elem({2, 1}, {0, 0});
    auto b = elem({2, 1}, {1, 1}); // colors 1e1 - 1e2 reduced mod 2
    CHECK(multiply(a, b, g212) == elem({1, 2}, {1, 1}));
}

TEST_CASE("inverse") {
    GroupSpec g312{3, 1, 2};
    auto x = elem({2, 1}, {1, 0});
    CHECK(multiply(x, inverse(x, g312), g312) == wreath_identity(g312));
    CHECK(multiply(inverse(x, g312), x, g312) == wreath_identity(g312));
    CHECK(inverse(inverse(x, g312), g312) == x);
    CHECK(inverse(wreath_identity(g312), g312) == wreath_identity(g312));
}

TEST_CASE("group axioms and wt homomorphism on small groups") {
    for (GroupSpec spec : {GroupSpec{1, 1, 4}, GroupSpec{3, 1, 2},
                           GroupSpec{2, 2, 3}, GroupSpec{2, 1, 3},
                           GroupSpec{4, 4, 2}}) {
        auto wg = build_wreath_group(spec);
        REQUIRE(Int(wg.fg.order) == spec.order());
        for (int a = 0; a < wg.fg.order; ++a) {
            CHECK(wg.fg.mulx(a, wg.fg.identity) == a);
            CHECK(wg.fg.mulx(wg.fg.identity, a) == a);
            CHECK(wg.fg.mulx(a, wg.fg.inv[a]) == wg.fg.identity);
            for (int b = 0; b < wg.fg.order; ++b) {
                auto z = multiply(wg.elems[a], wg.elems[b], spec);
                CHECK(is_member(z, spec));
                CHECK(wg.id_of(z) == wg.fg.mulx(a, b));
                CHECK(wt(z, spec) ==
                      (wt(wg.elems[a], spec) + wt(wg.elems[b], spec)) % spec.m);
                // associativity spot-check against the table
                for (int c : {0, wg.fg.order / 2}) {
                    CHECK(wg.fg.mulx(wg.fg.mulx(a, b), c) ==
                          wg.fg.mulx(a, wg.fg.mulx(b, c)));
                }
            }
        }
    }
}

TEST_CASE("reflection counts and canonical order") {
    CHECK(reflections_of(GroupSpec{2, 1, 2}).size() == 4);
    CHECK(reflections_of(GroupSpec{3, 3, 3}).size() == 9);
    CHECK(reflections_of(GroupSpec{1, 1, 3}).size() == 3);
    auto refl = reflections_of(GroupSpec{3, 1, 2});
    CHECK(refl.size() == 3 + 4); // m n(n-1)/2 transposition-like + n(m-1) diagonal
    // transposition-like come first, (i,j,k)-lexicographic, then diagonal (i,k)
    CHECK_FALSE(refl[0].diagonal);
    CHECK(refl[0].i == 1);
    CHECK(refl[0].j == 2);
    CHECK(refl[0].k == 0);
    CHECK(refl[2].k == 2);
    CHECK(refl[3].diagonal);
    CHECK(refl[3].i == 1);
    CHECK(refl[3].k == 1);
    for (size_t t = 0; t < refl.size(); ++t) CHECK(refl[t].index == (int)t);
}

TEST_CASE("diagonal reflections only below p = m, multiples of p") {
    auto none = reflections_of(GroupSpec{3, 3, 3});
    for (auto& r : none) CHECK_FALSE(r.diagonal);
    auto g42 = reflections_of(GroupSpec{4, 2, 2});
    int diag = 0;
    for (auto& r : g42)
        if (r.diagonal) {
            ++diag;
            CHECK(r.k % 2 == 0);
            CHECK(r.k != 0);
        }
    CHECK(diag == 2); // n (m/p - 1)
}

TEST_CASE("reflection orders") {
    GroupSpec spec{4, 1, 2};
    for (const auto& r : reflections_of(spec)) {
        auto x = reflection_element(r, spec);
        long expect = r.diagonal ? 4 / std::gcd(long(r.k), 4L) : 2;
        auto y = x;
        long ord = 1;
        while (y != wreath_identity(spec)) {
            y = multiply(y, x, spec);
            ++ord;
        }
        CHECK(ord == expect);
    }
}

TEST_CASE("cycle data") {
    GroupSpec g313{3, 1, 3};
    auto d = cycle_data(elem({2, 3, 1}, {1, 0, 2}), g313);
    REQUIRE(d.cycles.size() == 1);
    CHECK(d.cycles[0].length == 3);
    CHECK(d.cycles[0].color == 0);
    CHECK(d.total_color == 0);

    GroupSpec g212{2, 1, 2};
    auto d2 = cycle_data(elem({2, 1}, {1, 0}), g212);
    REQUIRE(d2.cycles.size() == 1);
    CHECK(d2.cycles[0].length == 2);
    CHECK(d2.cycles[0].color == 1);

    auto did = cycle_data(wreath_identity(g313), g313);
    CHECK(did.cycles.size() == 3);
    for (auto& c : did.cycles) {
        CHECK(c.length == 1);
        CHECK(c.color == 0);
    }
}

TEST_CASE("projection homomorphism") {
    GroupSpec g312{3, 1, 2};
    auto x = elem({2, 1}, {1, 2});
    CHECK(project(x, g312, 3) == x);
    auto p1 = project(x, g312, 1);
    CHECK(p1.perm == std::vector<int>{2, 1});
    CHECK(p1.colors == std::vector<int>{0, 0});
    auto wg = build_wreath_group(g312);
    GroupSpec g112{1, 1, 2};
    for (int a = 0; a < wg.fg.order; ++a)
        for (int b = 0; b < wg.fg.order; ++b) {
            auto lhs = project(multiply(wg.elems[a], wg.elems[b], g312), g312, 1);
            auto rhs = multiply(project(wg.elems[a], g312, 1),
                                project(wg.elems[b], g312, 1), g112);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("JSON round trip") {
    GroupSpec spec{3, 1, 2};
    auto wg = build_wreath_group(spec);
    for (const auto& x : wg.elems) {
        auto back = element_from_json(element_to_json(x), spec);
        CHECK(back == x);
    }
    // colors reduce mod m on parse
    auto y = element_from_json("{\"perm\":[2,1],\"colors\":[4,-1]}", spec);
    CHECK(y == elem({2, 1}, {1, 2}));
}

namespace {

// matrix of [u;a] over the cyclotomics: column i holds zeta^{a_i} at row u(i)
std::vector<std::vector<CycloNum>> matrix_of(const WreathElement& x, long m) {
    size_t n = x.perm.size();
    std::vector<std::vector<CycloNum>> M(
        n, std::vector<CycloNum>(n, CycloNum::zero((int)m)));
    for (size_t i = 0; i < n; ++i)
        M[x.perm[i] - 1][i] = CycloNum::root_power((int)m, x.colors[i]);
    return M;
}

} // namespace

TEST_CASE("reflections are exactly the codim-1 fixed-space elements") {
    for (GroupSpec spec : {GroupSpec{2, 1, 2}, GroupSpec{3, 1, 2},
                           GroupSpec{2, 2, 3}, GroupSpec{1, 1, 3},
                           GroupSpec{4, 2, 2}}) {
        auto refl = reflections_of(spec);
        std::set<WreathElement> refl_set;
        for (const auto& r : refl) refl_set.insert(reflection_element(r, spec));
        CHECK(refl_set.size() == refl.size());

        auto wg = build_wreath_group(spec);
        for (const auto& x : wg.elems) {
            auto M = matrix_of(x, spec.m);
            for (size_t i = 0; i < M.size(); ++i)
                M[i][i] -= CycloNum::one((int)spec.m);
            bool codim1 = rank_gauss(M) == 1;
            CHECK(codim1 == (refl_set.count(x) > 0));
        }
    }
}
