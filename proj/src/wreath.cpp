#include "wfact/wreath.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace wfact {

namespace {

int mod(long v, long m) { return static_cast<int>(((v % m) + m) % m); }

void check_dims(const WreathElement& x, const GroupSpec& spec) {
    if (static_cast<long>(x.perm.size()) != spec.n ||
        static_cast<long>(x.colors.size()) != spec.n)
        throw std::invalid_argument("wreath element: dimension mismatch");
}

} // namespace

WreathElement wreath_identity(const GroupSpec& spec) {
    WreathElement e;
    e.perm.resize(spec.n);
    std::iota(e.perm.begin(), e.perm.end(), 1);
    e.colors.assign(spec.n, 0);
    return e;
}

bool is_member(const WreathElement& x, const GroupSpec& spec) {
    long s = 0;
    for (int c : x.colors) s += c;
    return s % spec.p == 0;
}

WreathElement multiply(const WreathElement& x, const WreathElement& y,
                       const GroupSpec& spec) {
    check_dims(x, spec);
    check_dims(y, spec);
    WreathElement z;
    z.perm.resize(spec.n);
    z.colors.resize(spec.n);
    for (long j = 0; j < spec.n; ++j) {
        z.perm[j] = x.perm[y.perm[j] - 1];
        z.colors[j] = mod(x.colors[y.perm[j] - 1] + y.colors[j], spec.m);
    }
    return z;
}

WreathElement inverse(const WreathElement& x, const GroupSpec& spec) {
    check_dims(x, spec);
    WreathElement z;
    z.perm.resize(spec.n);
    z.colors.resize(spec.n);
    for (long j = 0; j < spec.n; ++j) {
        z.perm[x.perm[j] - 1] = static_cast<int>(j + 1);
        z.colors[x.perm[j] - 1] = mod(-x.colors[j], spec.m);
    }
    return z;
}

int wt(const WreathElement& x, const GroupSpec& spec) {
    long s = 0;
    for (int c : x.colors) s += c;
    return mod(s, spec.m);
}

CycleData cycle_data(const WreathElement& x, const GroupSpec& spec) {
    check_dims(x, spec);
    CycleData data;
    std::vector<char> seen(spec.n, 0);
    long total = 0;
    for (long start = 0; start < spec.n; ++start) {
        if (seen[start]) continue;
        Cycle cyc;
        long cur = start, color = 0;
        do {
            seen[cur] = 1;
            cyc.support.push_back(static_cast<int>(cur + 1));
            color += x.colors[cur];
            cur = x.perm[cur] - 1;
        } while (cur != start);
        std::sort(cyc.support.begin(), cyc.support.end());
        cyc.length = static_cast<int>(cyc.support.size());
        cyc.color = mod(color, spec.m);
        total += color;
        data.cycles.push_back(std::move(cyc));
    }
    data.total_color = mod(total, spec.m);
    return data;
}

WreathElement project(const WreathElement& x, const GroupSpec& spec, long r) {
    if (r < 1 || spec.m % r != 0)
        throw std::invalid_argument("project: r must divide m");
    WreathElement z;
    z.perm = x.perm;
    z.colors.resize(spec.n);
    long c = spec.m / r;
    for (long j = 0; j < spec.n; ++j) z.colors[j] = mod(c * x.colors[j], r);
    return z;
}

std::vector<Reflection> reflections_of(const GroupSpec& spec) {
    std::vector<Reflection> out;
    for (int i = 1; i <= spec.n; ++i)
        for (int j = i + 1; j <= spec.n; ++j)
            for (int k = 0; k < spec.m; ++k)
                out.push_back({false, i, j, k, static_cast<int>(out.size())});
    if (spec.p < spec.m)
        for (int i = 1; i <= spec.n; ++i)
            for (int k = static_cast<int>(spec.p); k < spec.m;
                 k += static_cast<int>(spec.p))
                out.push_back({true, i, 0, k, static_cast<int>(out.size())});
    return out;
}

WreathElement reflection_element(const Reflection& r, const GroupSpec& spec) {
    WreathElement e = wreath_identity(spec);
    if (r.diagonal) {
        e.colors[r.i - 1] = r.k;
    } else {
        std::swap(e.perm[r.i - 1], e.perm[r.j - 1]);
        e.colors[r.i - 1] = r.k;
        e.colors[r.j - 1] = mod(-r.k, spec.m);
    }
    return e;
}

std::string element_to_json(const WreathElement& x) {
    nlohmann::json j;
    j["perm"] = x.perm;
    j["colors"] = x.colors;
    return j.dump();
}

WreathElement element_from_json(const std::string& text,
                                const GroupSpec& spec) {
    auto j = nlohmann::json::parse(text);
    WreathElement x;
    x.perm = j.at("perm").get<std::vector<int>>();
    std::vector<long> raw = j.at("colors").get<std::vector<long>>();
    for (long c : raw) x.colors.push_back(mod(c, spec.m));
    check_dims(x, spec);
    std::vector<char> hit(spec.n, 0);
    for (int v : x.perm) {
        if (v < 1 || v > spec.n || hit[v - 1])
            throw std::invalid_argument("element_from_json: invalid perm");
        hit[v - 1] = 1;
    }
    if (!is_member(x, spec))
        throw std::invalid_argument("element_from_json: color sum violates p");
    return x;
}

int WreathGroup::id_of(const WreathElement& x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || !(*it == x))
        throw std::invalid_argument("WreathGroup: element not found");
    return static_cast<int>(it - elems.begin());
}

WreathGroup build_wreath_group(const GroupSpec& spec, long element_budget) {
    if (!spec.valid()) throw std::invalid_argument("invalid group spec");
    if (spec.order() > element_budget)
        throw std::runtime_error("build_wreath_group: budget exceeded");

    WreathGroup g;
    g.spec = spec;

    std::vector<int> perm(spec.n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> colors(spec.n, 0);
        while (true) {
            long s = 0;
            for (int c : colors) s += c;
            if (s % spec.p == 0) g.elems.push_back({perm, colors});
            long pos = spec.n - 1;
            while (pos >= 0 && colors[pos] == spec.m - 1) colors[pos--] = 0;
            if (pos < 0) break;
            ++colors[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(g.elems.begin(), g.elems.end());

    int order = static_cast<int>(g.elems.size());
    g.fg.order = order;
    g.fg.identity = g.id_of(wreath_identity(spec));
    g.fg.mul.resize(static_cast<size_t>(order) * order);
    g.fg.inv.resize(order);
    for (int a = 0; a < order; ++a) {
        g.fg.inv[a] = g.id_of(inverse(g.elems[a], spec));
        for (int b = 0; b < order; ++b)
            g.fg.mul[static_cast<size_t>(a) * order + b] =
                g.id_of(multiply(g.elems[a], g.elems[b], spec));
    }

    g.refl_meta = reflections_of(spec);
    for (const Reflection& r : g.refl_meta)
        g.fg.reflections.push_back(g.id_of(reflection_element(r, spec)));
    return g;
}

} // namespace wfact
