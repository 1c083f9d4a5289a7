#include "wfact/orbit.hpp"
#include "wfact/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace wfact {

namespace {

constexpr double kTol = 1e-9;

std::vector<Rat> rat_vec(std::initializer_list<long> v) {
    std::vector<Rat> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

RootDatum crystallographic_datum(std::string name,
                                 std::vector<std::vector<Rat>> simple) {
    RootDatum d;
    d.name = std::move(name);
    d.crystallographic = true;
    d.simple_q = std::move(simple);
    return d;
}

// rows of the Cholesky factor of the Coxeter-matrix Gram form give unit
// simple roots with the prescribed pairwise angles
RootDatum gram_datum(std::string name,
                     const std::vector<std::vector<int>>& coxeter) {
    size_t n = coxeter.size();
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            g[i][j] = i == j ? 1.0
                             : -std::cos(std::numbers::pi / coxeter[i][j]);
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            double s = g[i][j];
            for (size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            l[i][j] = i == j ? std::sqrt(s) : s / l[j][j];
        }
    }
    RootDatum d;
    d.name = std::move(name);
    d.crystallographic = false;
    d.simple_f = std::move(l);
    return d;
}

RootDatum type_a(int n) {
    std::vector<std::vector<Rat>> simple;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> v(n + 1, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back(std::move(v));
    }
    return crystallographic_datum("A" + std::to_string(n), std::move(simple));
}

RootDatum type_b(int n) {
    std::vector<std::vector<Rat>> simple;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<Rat> v(n, Rat(0));
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back(std::move(v));
    }
    std::vector<Rat> last(n, Rat(0));
    last[n - 1] = 1;
    simple.push_back(std::move(last));
    return crystallographic_datum("B" + std::to_string(n), std::move(simple));
}

RootDatum type_i2(int m) {
    if (m == 3) {
        auto d = type_a(2);
        d.name = "I2(3)";
        return d;
    }
    if (m == 4) {
        auto d = type_b(2);
        d.name = "I2(4)";
        return d;
    }
    if (m == 2)
        return crystallographic_datum("I2(2)",
                                      {rat_vec({1, 0}), rat_vec({0, 1})});
    if (m == 6)
        return crystallographic_datum(
            "I2(6)", {rat_vec({1, -1, 0}), rat_vec({-2, 1, 1})});
    return gram_datum("I2(" + std::to_string(m) + ")", {{1, m}, {m, 1}});
}

double dot_f(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot_q(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::vector<double> reflect_f(const std::vector<double>& v,
                              const std::vector<double>& alpha) {
    double c = 2.0 * dot_f(v, alpha) / dot_f(alpha, alpha);
    std::vector<double> out(v);
    for (size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
    return out;
}

std::vector<Rat> reflect_q(const std::vector<Rat>& v,
                           const std::vector<Rat>& alpha) {
    Rat c = Rat(2) * dot_q(v, alpha) / dot_q(alpha, alpha);
    std::vector<Rat> out(v);
    for (size_t i = 0; i < v.size(); ++i) out[i] -= c * alpha[i];
    return out;
}

bool close_f(const std::vector<double>& a, const std::vector<double>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > kTol) return false;
    return true;
}

int find_f(const std::vector<std::vector<double>>& roots,
           const std::vector<double>& v) {
    for (size_t i = 0; i < roots.size(); ++i)
        if (close_f(roots[i], v)) return static_cast<int>(i);
    return -1;
}

bool lex_less_f(const std::vector<double>& a, const std::vector<double>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i] - kTol) return true;
        if (a[i] > b[i] + kTol) return false;
    }
    return false;
}

std::vector<double> solve_coords_f(
    const std::vector<std::vector<double>>& simple,
    const std::vector<double>& root) {
    size_t n = simple.size();
    // normal equations; the simple-root Gram matrix is positive definite
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    std::vector<double> rhs(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) g[i][j] = dot_f(simple[i], simple[j]);
        rhs[i] = dot_f(simple[i], root);
    }
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t i = c + 1; i < n; ++i)
            if (std::fabs(g[i][c]) > std::fabs(g[piv][c])) piv = i;
        std::swap(g[c], g[piv]);
        std::swap(rhs[c], rhs[piv]);
        for (size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            double f = g[i][c] / g[c][c];
            for (size_t j = 0; j < n; ++j) g[i][j] -= f * g[c][j];
            rhs[i] -= f * rhs[c];
        }
    }
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / g[i][i];
    return x;
}

} // namespace

RootDatum preset_datum(const std::string& name) {
    if (name == "A1") return type_a(1);
    if (name == "A2") return type_a(2);
    if (name == "A3") return type_a(3);
    if (name == "A4") return type_a(4);
    if (name == "B2") return type_b(2);
    if (name == "B3") return type_b(3);
    if (name == "B4") return type_b(4);
    if (name == "D3")
        return crystallographic_datum(
            "D3", {rat_vec({1, -1, 0}), rat_vec({0, 1, -1}), rat_vec({0, 1, 1})});
    if (name == "D4")
        return crystallographic_datum(
            "D4", {rat_vec({1, -1, 0, 0}), rat_vec({0, 1, -1, 0}),
                   rat_vec({0, 0, 1, -1}), rat_vec({0, 0, 1, 1})});
    if (name == "F4") {
        std::vector<Rat> half{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)};
        return crystallographic_datum(
            "F4", {rat_vec({0, 1, -1, 0}), rat_vec({0, 0, 1, -1}),
                   rat_vec({0, 0, 0, 1}), half});
    }
    if (name == "H3") return gram_datum("H3", {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
    if (name.size() >= 5 && name.substr(0, 3) == "I2(" && name.back() == ')') {
        int m = std::stoi(name.substr(3, name.size() - 4));
        if (m >= 2 && m <= 12) return type_i2(m);
    }
    throw std::invalid_argument("unknown preset: " + name);
}

RootDatum datum_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    RootDatum d;
    d.name = "custom";
    d.crystallographic = false;
    d.simple_f = j.get<std::vector<std::vector<double>>>();
    if (d.simple_f.empty()) throw std::invalid_argument("empty root data");
    for (const auto& v : d.simple_f)
        if (v.size() != d.simple_f[0].size())
            throw std::invalid_argument("ragged root data");
    return d;
}

int OrbitGroup::id_of_perm(const std::vector<int>& perm) const {
    auto it = std::lower_bound(perms.begin(), perms.end(), perm);
    if (it == perms.end() || *it != perm)
        throw std::invalid_argument("OrbitGroup: unknown permutation");
    return static_cast<int>(it - perms.begin());
}

std::vector<std::vector<Rat>> OrbitGroup::matrix_q(int w) const {
    std::vector<std::vector<Rat>> m(rank, std::vector<Rat>(rank));
    for (int j = 0; j < rank; ++j) {
        int image = perms[w][refl_root[simple_refl[j]]];
        // refl_root of a simple reflection is the simple root's index
        for (int i = 0; i < rank; ++i) m[i][j] = coords_q[image][i];
    }
    return m;
}

std::vector<std::vector<double>> OrbitGroup::matrix_f(int w) const {
    std::vector<std::vector<double>> m(rank, std::vector<double>(rank));
    for (int j = 0; j < rank; ++j) {
        int image = perms[w][refl_root[simple_refl[j]]];
        for (int i = 0; i < rank; ++i) m[i][j] = coords_f[image][i];
    }
    return m;
}

OrbitGroup build_orbit_group(const RootDatum& datum, long element_budget) {
    OrbitGroup g;
    g.name = datum.name;
    g.crystallographic = datum.crystallographic;
    g.rank = static_cast<int>(datum.crystallographic ? datum.simple_q.size()
                                                     : datum.simple_f.size());

    constexpr long kRootCeiling = 400;

    std::vector<int> simple_root_idx(g.rank);
    if (datum.crystallographic) {
        std::map<std::vector<Rat>, int> seen;
        for (const auto& a : datum.simple_q)
            if (seen.emplace(a, static_cast<int>(g.roots_q.size())).second)
                g.roots_q.push_back(a);
        for (size_t head = 0; head < g.roots_q.size(); ++head) {
            auto v = g.roots_q[head];
            for (const auto& a : datum.simple_q) {
                auto w = reflect_q(v, a);
                if (seen.emplace(w, static_cast<int>(g.roots_q.size())).second)
                    g.roots_q.push_back(std::move(w));
            }
            if (static_cast<long>(g.roots_q.size()) > kRootCeiling)
                throw std::runtime_error("root closure exceeds ceiling");
        }
        std::sort(g.roots_q.begin(), g.roots_q.end());
        for (const auto& r : g.roots_q) {
            std::vector<double> f;
            for (const auto& x : r) f.push_back(x.get_d());
            g.roots_f.push_back(std::move(f));
        }
        for (int j = 0; j < g.rank; ++j) {
            auto it = std::lower_bound(g.roots_q.begin(), g.roots_q.end(),
                                       datum.simple_q[j]);
            simple_root_idx[j] = static_cast<int>(it - g.roots_q.begin());
        }
    } else {
        for (const auto& a : datum.simple_f)
            if (find_f(g.roots_f, a) < 0) g.roots_f.push_back(a);
        for (size_t head = 0; head < g.roots_f.size(); ++head) {
            auto v = g.roots_f[head];
            for (const auto& a : datum.simple_f) {
                auto w = reflect_f(v, a);
                if (find_f(g.roots_f, w) < 0) g.roots_f.push_back(std::move(w));
            }
            if (static_cast<long>(g.roots_f.size()) > kRootCeiling)
                throw std::runtime_error("root closure exceeds ceiling");
        }
        std::sort(g.roots_f.begin(), g.roots_f.end(), lex_less_f);
        for (int j = 0; j < g.rank; ++j) {
            simple_root_idx[j] = find_f(g.roots_f, datum.simple_f[j]);
            if (simple_root_idx[j] < 0)
                throw std::logic_error("lost a simple root during closure");
        }
    }

    int nroots = static_cast<int>(g.roots_f.size());

    // coordinates in the simple-root basis
    if (datum.crystallographic) {
        size_t dim = datum.simple_q[0].size();
        std::vector<std::vector<Rat>> basis(dim, std::vector<Rat>(g.rank));
        for (size_t d = 0; d < dim; ++d)
            for (int j = 0; j < g.rank; ++j) basis[d][j] = datum.simple_q[j][d];
        for (const auto& r : g.roots_q)
            g.coords_q.push_back(solve_tall(basis, r));
        for (const auto& c : g.coords_q) {
            std::vector<double> f;
            for (const auto& x : c) f.push_back(x.get_d());
            g.coords_f.push_back(std::move(f));
        }
    } else {
        for (const auto& r : g.roots_f)
            g.coords_f.push_back(solve_coords_f(datum.simple_f, r));
    }

    for (int r = 0; r < nroots; ++r) {
        double height = 0;
        for (double c : g.coords_f[r]) height += c;
        if (height > kTol) g.positive_roots.push_back(r);
    }

    // root permutation induced by reflecting in root index r
    auto reflection_perm = [&](int r) {
        std::vector<int> perm(nroots);
        for (int x = 0; x < nroots; ++x) {
            int image;
            if (datum.crystallographic) {
                auto v = reflect_q(g.roots_q[x], g.roots_q[r]);
                auto it =
                    std::lower_bound(g.roots_q.begin(), g.roots_q.end(), v);
                if (it == g.roots_q.end() || *it != v)
                    throw std::logic_error("root set not closed");
                image = static_cast<int>(it - g.roots_q.begin());
            } else {
                image = find_f(g.roots_f, reflect_f(g.roots_f[x], g.roots_f[r]));
                if (image < 0) throw std::logic_error("root set not closed");
            }
            perm[x] = image;
        }
        return perm;
    };

    std::vector<std::vector<int>> simple_perms;
    for (int j = 0; j < g.rank; ++j)
        simple_perms.push_back(reflection_perm(simple_root_idx[j]));

    std::vector<int> ident(nroots);
    std::iota(ident.begin(), ident.end(), 0);
    std::map<std::vector<int>, int> elem_seen;
    g.perms.push_back(ident);
    elem_seen.emplace(ident, 0);
    for (size_t head = 0; head < g.perms.size(); ++head) {
        auto cur = g.perms[head];
        for (const auto& s : simple_perms) {
            std::vector<int> next(nroots);
            for (int x = 0; x < nroots; ++x) next[x] = cur[s[x]];
            if (elem_seen.emplace(next, static_cast<int>(g.perms.size()))
                    .second)
                g.perms.push_back(std::move(next));
        }
        if (static_cast<long>(g.perms.size()) > element_budget)
            throw std::runtime_error("build_orbit_group: budget exceeded");
    }
    std::sort(g.perms.begin(), g.perms.end());

    int order = static_cast<int>(g.perms.size());
    g.fg.order = order;
    g.fg.identity = g.id_of_perm(ident);
    g.fg.mul.resize(static_cast<size_t>(order) * order);
    g.fg.inv.resize(order);
    std::vector<int> scratch(nroots);
    for (int a = 0; a < order; ++a) {
        for (int x = 0; x < nroots; ++x) scratch[g.perms[a][x]] = x;
        g.fg.inv[a] = g.id_of_perm(scratch);
        for (int b = 0; b < order; ++b) {
            for (int x = 0; x < nroots; ++x)
                scratch[x] = g.perms[a][g.perms[b][x]];
            g.fg.mul[static_cast<size_t>(a) * order + b] = g.id_of_perm(scratch);
        }
    }

    std::vector<int> root_to_refl(nroots, -1);
    for (size_t k = 0; k < g.positive_roots.size(); ++k) {
        int r = g.positive_roots[k];
        g.fg.reflections.push_back(g.id_of_perm(reflection_perm(r)));
        g.refl_root.push_back(r);
        root_to_refl[r] = static_cast<int>(k);
    }
    for (int j = 0; j < g.rank; ++j) {
        int k = root_to_refl[simple_root_idx[j]];
        if (k < 0) throw std::logic_error("simple root not positive");
        g.simple_refl.push_back(k);
    }

    int cox = g.fg.identity;
    for (int j = g.rank - 1; j >= 0; --j)
        cox = g.fg.mulx(g.fg.reflections[g.simple_refl[j]], cox);
    int cur = cox, h = 1;
    while (cur != g.fg.identity) {
        cur = g.fg.mulx(cox, cur);
        ++h;
    }
    g.coxeter_number = h;
    return g;
}

int fixed_space_dim(const OrbitGroup& g, int w) {
    if (g.crystallographic) {
        auto m = g.matrix_q(w);
        for (int i = 0; i < g.rank; ++i) m[i][i] -= 1;
        return g.rank - static_cast<int>(rank_gauss(std::move(m)));
    }
    auto m = g.matrix_f(w);
    for (int i = 0; i < g.rank; ++i) m[i][i] -= 1;
    return g.rank - static_cast<int>(rank_gauss_f(std::move(m), 1e-7));
}

CartanData cartan_and_connection_index(const OrbitGroup& g) {
    CartanData data;
    if (!g.crystallographic) return data;
    int n = g.rank;
    std::vector<std::vector<Rat>> simple;
    for (int j = 0; j < n; ++j)
        simple.push_back(g.roots_q[g.refl_root[g.simple_refl[j]]]);
    data.cartan.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            data.cartan[i][j] =
                Rat(2) * dot_q(simple[i], simple[j]) / dot_q(simple[j], simple[j]);
    Rat det = det_bareiss(data.cartan, Rat(1));
    if (det < 0) det = -det;
    if (!is_integer(det)) throw std::logic_error("Cartan determinant not integral");
    data.connection_index = to_integer(det);
    data.has_index = true;

    const std::vector<Rat>* best = nullptr;
    Rat best_height = 0;
    for (int r : g.positive_roots) {
        Rat h = 0;
        for (const auto& c : g.coords_q[r]) h += c;
        if (best == nullptr || h > best_height) {
            best = &g.coords_q[r];
            best_height = h;
        }
    }
    for (const auto& c : *best) {
        if (!is_integer(c))
            throw std::logic_error("highest root coefficient not integral");
        data.highest_coeffs.push_back(to_integer(c));
    }
    return data;
}

} // namespace wfact
