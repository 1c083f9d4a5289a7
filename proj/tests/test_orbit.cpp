#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "wfact/orbit.hpp"
#include "wfact/parabolic.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

using namespace wfact;

TEST_CASE("preset orders, reflection counts, Coxeter numbers") {
    struct Row { const char* name; int order, nrefl, h; };
    std::vector<Row> rows = {
        {"A1", 2, 1, 2},   {"A2", 6, 3, 3},    {"A3", 24, 6, 4},
        {"A4", 120, 10, 5},{"B2", 8, 4, 4},    {"B3", 48, 9, 6},
        {"B4", 384, 16, 8},{"D3", 24, 6, 4},   {"D4", 192, 12, 6},
        {"H3", 120, 15, 10}, {"I2(5)", 10, 5, 5}, {"I2(7)", 14, 7, 7},
        {"I2(12)", 24, 12, 12},
    };
    for (const auto& r : rows) {
        auto og = build_orbit_group(preset_datum(r.name));
        CHECK(og.fg.order == r.order);
        CHECK(og.fg.nrefl() == r.nrefl);
        CHECK(og.coxeter_number == r.h);
        CHECK(og.positive_roots.size() == (size_t)r.nrefl);
    }
}

TEST_CASE("I2(3), I2(4), I2(6) resolve to exact crystallographic data") {
    for (auto name : {"I2(3)", "I2(4)", "I2(6)"}) {
        auto og = build_orbit_group(preset_datum(name));
        CHECK(og.crystallographic);
    }
    CHECK(build_orbit_group(preset_datum("I2(4)")).fg.order == 8);
    CHECK_FALSE(build_orbit_group(preset_datum("I2(5)")).crystallographic);
    CHECK_FALSE(build_orbit_group(preset_datum("H3")).crystallographic);
}

TEST_CASE("faithful action on roots") {
    for (auto name : {"A3", "B3", "H3"}) {
        auto og = build_orbit_group(preset_datum(name));
        std::set<std::vector<int>> seen(og.perms.begin(), og.perms.end());
        CHECK(seen.size() == (size_t)og.fg.order);
    }
}

TEST_CASE("Cartan matrices and connection indices") {
    struct Row { const char* name; long index; };
    for (auto [name, index] : std::vector<Row>{{"A2", 3}, {"A3", 4}, {"B2", 2},
                                               {"B3", 2}, {"D3", 4}, {"D4", 4},
                                               {"I2(6)", 1}}) {
        auto og = build_orbit_group(preset_datum(name));
        auto cd = cartan_and_connection_index(og);
        REQUIRE(cd.has_index);
        CHECK(cd.connection_index == index);
        // diagonal of a Cartan matrix is 2
        for (int i = 0; i < og.rank; ++i) CHECK(cd.cartan[i][i] == Rat(2));
        // Weyl identity #W = n! * prod(c_i) * I(W)
        Int prod = 1;
        for (const auto& c : cd.highest_coeffs) prod *= c;
        CHECK(Int(og.fg.order) ==
              factorial(og.rank) * prod * cd.connection_index);
    }
    auto a2 = cartan_and_connection_index(build_orbit_group(preset_datum("A2")));
    CHECK(a2.highest_coeffs == std::vector<Int>{1, 1});
    auto h3 = cartan_and_connection_index(build_orbit_group(preset_datum("H3")));
    CHECK_FALSE(h3.has_index);
}

TEST_CASE("fixed space dimension matches BFS reflection length") {
    for (auto name : {"A2", "A3", "B2", "B3", "D3", "I2(5)", "H3"}) {
        auto og = build_orbit_group(preset_datum(name));
        auto lr = reflection_length_table(og.fg);
        CHECK(fixed_space_dim(og, og.fg.identity) == og.rank);
        for (int t : og.fg.reflections)
            CHECK(fixed_space_dim(og, t) == og.rank - 1);
        for (int e = 0; e < og.fg.order; ++e) {
            CHECK(lr[e] == og.rank - fixed_space_dim(og, e));
            CHECK(lr[e] == reflection_length(og, e));
        }
    }
}

namespace {

// try to extend gen -> image to a full isomorphism by BFS; empty on failure
std::vector<int> extend_isomorphism(const FiniteGroup& a,
                                    const std::vector<int>& gens_a,
                                    const FiniteGroup& b,
                                    const std::vector<int>& gens_b) {
    if (a.order != b.order || gens_a.size() != gens_b.size()) return {};
    std::vector<int> phi(a.order, -1);
    phi[a.identity] = b.identity;
    std::queue<int> q;
    q.push(a.identity);
    int mapped = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (size_t k = 0; k < gens_a.size(); ++k) {
            int xa = a.mulx(x, gens_a[k]);
            int xb = b.mulx(phi[x], gens_b[k]);
            if (phi[xa] == -1) {
                phi[xa] = xb;
                ++mapped;
                q.push(xa);
            } else if (phi[xa] != xb) {
                return {};
            }
        }
    }
    if (mapped != a.order) return {};
    std::vector<char> hit(b.order, 0);
    for (int y : phi) {
        if (hit[y]) return {};
        hit[y] = 1;
    }
    return phi;
}

void check_wreath_orbit_iso(const GroupSpec& spec,
                            const std::vector<WreathElement>& gens_w,
                            const std::string& preset) {
    auto wg = build_wreath_group(spec);
    auto og = build_orbit_group(preset_datum(preset));
    REQUIRE(Int(og.fg.order) == spec.order());
    CHECK(og.fg.nrefl() == wg.fg.nrefl());

    std::vector<int> ga;
    for (const auto& g : gens_w) ga.push_back(wg.id_of(g));

    // the simple reflections in some order must realize the isomorphism
    std::vector<int> simple;
    for (int s : og.simple_refl) simple.push_back(og.fg.reflections[s]);
    std::sort(simple.begin(), simple.end());
    std::vector<int> phi;
    do {
        phi = extend_isomorphism(wg.fg, ga, og.fg, simple);
        if (!phi.empty()) break;
    } while (std::next_permutation(simple.begin(), simple.end()));
    REQUIRE_FALSE(phi.empty());

    // reflection lengths transport along the isomorphism
    auto lr_w = reflection_length_table(wg.fg);
    auto lr_o = reflection_length_table(og.fg);
    for (int e = 0; e < wg.fg.order; ++e) CHECK(lr_w[e] == lr_o[phi[e]]);
    // reflections map to reflections
    std::vector<char> is_refl(og.fg.order, 0);
    for (int t : og.fg.reflections) is_refl[t] = 1;
    for (int t : wg.fg.reflections) CHECK(is_refl[phi[t]]);
}

WreathElement transposition(int i, int j, int k, const GroupSpec& spec) {
    Reflection r{false, i, j, k, 0};
    return reflection_element(r, spec);
}

} // namespace

TEST_CASE("wreath model and orbit model agree through generators") {
    // A_{n-1} = G(1,1,n)
    for (long n : {3L, 4L}) {
        GroupSpec spec{1, 1, n};
        std::vector<WreathElement> gens;
        for (int i = 1; i < n; ++i)
            gens.push_back(transposition(i, i + 1, 0, spec));
        check_wreath_orbit_iso(spec, gens, "A" + std::to_string(n - 1));
    }
    // B_n = G(2,1,n)
    for (long n : {2L, 3L}) {
        GroupSpec spec{2, 1, n};
        std::vector<WreathElement> gens;
        for (int i = 1; i < n; ++i)
            gens.push_back(transposition(i, i + 1, 0, spec));
        Reflection diag{true, (int)n, 0, 1, 0};
        gens.push_back(reflection_element(diag, spec));
        check_wreath_orbit_iso(spec, gens, "B" + std::to_string(n));
    }
    // D_n = G(2,2,n)
    for (long n : {3L, 4L}) {
        GroupSpec spec{2, 2, n};
        std::vector<WreathElement> gens;
        for (int i = 1; i < n; ++i)
            gens.push_back(transposition(i, i + 1, 0, spec));
        gens.push_back(transposition((int)n - 1, (int)n, 1, spec));
        check_wreath_orbit_iso(spec, gens, "D" + std::to_string(n));
    }
    // I2(m) = G(m,m,2)
    for (long m : {3L, 4L, 5L, 6L}) {
        GroupSpec spec{m, m, 2};
        std::vector<WreathElement> gens = {transposition(1, 2, 0, spec),
                                           transposition(1, 2, 1, spec)};
        check_wreath_orbit_iso(spec, gens, "I2(" + std::to_string(m) + ")");
    }
}
