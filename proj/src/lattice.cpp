#include "wfact/lattice.hpp"
#include "wfact/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

namespace wfact {

namespace {

uint64_t reflection_table_hash(const FiniteGroup& fg) {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ull;
    };
    mix(static_cast<uint64_t>(fg.order));
    mix(static_cast<uint64_t>(fg.nrefl()));
    for (int a : fg.reflections)
        for (int b : fg.reflections) mix(static_cast<uint64_t>(fg.mulx(a, b)));
    return h;
}

std::string cache_path(const FiniteGroup& fg) {
    const char* dir = std::getenv("WFACT_CACHE_DIR");
    if (!dir || !*dir) return {};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(reflection_table_hash(fg)));
    return std::string(dir) + "/lattice-" + buf + ".json";
}

ReflectionSubgroup subgroup_from_mask(const FiniteGroup& fg, uint64_t mask) {
    auto gen = generate_by_reflections(fg, mask);
    if (gen.refl_mask != mask)
        throw std::logic_error("subgroup_from_mask: mask not closed");
    ReflectionSubgroup sub;
    sub.mask = mask;
    sub.order = static_cast<int>(gen.elems.size());
    sub.elems = std::move(gen.elems);
    sub.member = std::move(gen.member);
    return sub;
}

bool subset(uint64_t a, uint64_t b) { return (a & ~b) == 0; }

std::vector<Int> mobius_for(const std::vector<ReflectionSubgroup>& subs,
                            int upper) {
    size_t n = subs.size();
    std::vector<Int> mu(n, 0);
    mu[upper] = 1;
    // subs are sorted by increasing order, so walking downwards visits all
    // supergroups of H before H itself
    for (size_t i = n; i-- > 0;) {
        if (static_cast<int>(i) == upper ||
            !subset(subs[i].mask, subs[upper].mask) ||
            subs[i].mask == subs[upper].mask)
            continue;
        Int acc = 0;
        for (size_t k = i + 1; k < n; ++k)
            if (subs[k].mask != subs[i].mask &&
                subset(subs[i].mask, subs[k].mask) &&
                subset(subs[k].mask, subs[upper].mask))
                acc += mu[k];
        mu[i] = -acc;
    }
    return mu;
}

} // namespace

int Lattice::index_of_mask(uint64_t mask) const {
    auto it = by_mask_.find(mask);
    if (it == by_mask_.end())
        throw std::invalid_argument("Lattice: unknown subgroup mask");
    return it->second;
}

const std::vector<Int>& Lattice::mobius_below(int upper) const {
    auto it = mobius_memo_.find(upper);
    if (it == mobius_memo_.end())
        it = mobius_memo_.emplace(upper, mobius_for(subs, upper)).first;
    return it->second;
}

Lattice enumerate_lattice(const FiniteGroup& fg) {
    if (fg.nrefl() > 63)
        throw std::runtime_error("enumerate_lattice: too many reflections");

    Lattice lat;
    lat.fg = &fg;

    std::vector<uint64_t> masks;
    std::string path = cache_path(fg);
    bool loaded = false;
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            auto j = nlohmann::json::parse(in, nullptr, false);
            if (!j.is_discarded() && j.value("version", 0) == 1) {
                for (const auto& s : j.at("masks"))
                    masks.push_back(std::stoull(s.get<std::string>()));
                loaded = true;
            }
        }
    }

    if (!loaded) {
        std::set<uint64_t> seen;
        std::vector<uint64_t> queue{closure_mask(fg, 0)};
        seen.insert(queue[0]);
        for (size_t head = 0; head < queue.size(); ++head) {
            uint64_t cur = queue[head];
            for (int t = 0; t < fg.nrefl(); ++t) {
                if (cur >> t & 1) continue;
                uint64_t next = closure_mask(fg, cur | (uint64_t{1} << t));
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        masks.assign(seen.begin(), seen.end());
    }

    for (uint64_t mask : masks) lat.subs.push_back(subgroup_from_mask(fg, mask));
    std::sort(lat.subs.begin(), lat.subs.end(),
              [](const ReflectionSubgroup& a, const ReflectionSubgroup& b) {
                  return a.order != b.order ? a.order < b.order
                                            : a.mask < b.mask;
              });
    for (size_t i = 0; i < lat.subs.size(); ++i)
        lat.by_mask_.emplace(lat.subs[i].mask, static_cast<int>(i));

    uint64_t full = fg.nrefl() == 0 ? 0 : (~uint64_t{0} >> (64 - fg.nrefl()));
    lat.top = lat.index_of_mask(full);
    lat.mobius_to_top = lat.mobius_below(lat.top);

    if (!path.empty() && !loaded) {
        nlohmann::json j;
        j["version"] = 1;
        std::vector<std::string> encoded;
        for (const auto& sub : lat.subs)
            encoded.push_back(std::to_string(sub.mask));
        j["masks"] = encoded;
        std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::rename(tmp.c_str(), path.c_str());
    }
    return lat;
}

std::vector<Int> tuple_series(const FiniteGroup& fg,
                              const ReflectionSubgroup& sub, int elem,
                              long max_ell) {
    if (!sub.member[elem])
        throw std::invalid_argument("tuple_series: element not in subgroup");
    std::vector<int> refls;
    for (int t = 0; t < fg.nrefl(); ++t)
        if (sub.mask >> t & 1) refls.push_back(fg.reflections[t]);

    std::vector<Int> counts;
    std::vector<Int> vec(fg.order, 0), next(fg.order, 0);
    vec[fg.identity] = 1;
    counts.push_back(vec[elem]);
    for (long ell = 1; ell <= max_ell; ++ell) {
        for (int x : sub.elems) next[x] = 0;
        for (int x : sub.elems) {
            if (vec[x] == 0) continue;
            for (int t : refls) next[fg.mulx(x, t)] += vec[x];
        }
        std::swap(vec, next);
        counts.push_back(vec[elem]);
    }
    return counts;
}

Int count_tuples(const FiniteGroup& fg, const ReflectionSubgroup& sub,
                 int elem, long ell) {
    return tuple_series(fg, sub, elem, ell).back();
}

std::vector<Int> full_series_within(const Lattice& lat, int upper, int elem,
                                    long max_ell) {
    const auto& mu = lat.mobius_below(upper);
    std::vector<Int> acc(max_ell + 1, 0);
    for (size_t i = 0; i < lat.subs.size(); ++i) {
        if (mu[i] == 0 || !lat.subs[i].member[elem]) continue;
        auto counts = tuple_series(*lat.fg, lat.subs[i], elem, max_ell);
        for (long ell = 0; ell <= max_ell; ++ell) acc[ell] += mu[i] * counts[ell];
    }
    return acc;
}

std::vector<Int> full_series(const Lattice& lat, int elem, long max_ell) {
    return full_series_within(lat, lat.top, elem, max_ell);
}

Int count_full(const Lattice& lat, int elem, long ell) {
    return full_series(lat, elem, ell).back();
}

FirstFull first_full_within(const Lattice& lat, int upper, int elem,
                            long max_ell) {
    if (max_ell < 0) max_ell = 2 * lat.fg->nrefl();
    auto counts = full_series_within(lat, upper, elem, max_ell);
    FirstFull r;
    for (long ell = 0; ell <= max_ell; ++ell) {
        if (counts[ell] != 0) {
            r.ltr = ell;
            r.value = counts[ell];
            break;
        }
    }
    return r;
}

FirstFull first_full(const Lattice& lat, int elem, long max_ell) {
    return first_full_within(lat, lat.top, elem, max_ell);
}

std::vector<std::vector<int>> hurwitz_orbit(const FiniteGroup& fg,
                                            const std::vector<int>& tuple,
                                            long budget) {
    if (tuple.empty())
        throw std::invalid_argument("hurwitz_orbit: empty tuple");
    std::vector<int> refl_of_elem(fg.order, -1);
    for (int i = 0; i < fg.nrefl(); ++i) refl_of_elem[fg.reflections[i]] = i;

    auto conj_index = [&](int a, int b) {
        // reflection index of b^-1 a b
        int e = fg.mulx(fg.mulx(fg.inv[fg.reflections[b]], fg.reflections[a]),
                        fg.reflections[b]);
        int r = refl_of_elem[e];
        if (r < 0) throw std::logic_error("hurwitz_orbit: conjugate not a reflection");
        return r;
    };
    auto conj_index_rev = [&](int a, int b) {
        // reflection index of a b a^-1
        int e = fg.mulx(fg.mulx(fg.reflections[a], fg.reflections[b]),
                        fg.inv[fg.reflections[a]]);
        int r = refl_of_elem[e];
        if (r < 0) throw std::logic_error("hurwitz_orbit: conjugate not a reflection");
        return r;
    };

    std::set<std::vector<int>> seen{tuple};
    std::vector<std::vector<int>> queue{tuple};
    for (size_t head = 0; head < queue.size(); ++head) {
        auto cur = queue[head];
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            auto fwd = cur;
            fwd[i] = cur[i + 1];
            fwd[i + 1] = conj_index(cur[i], cur[i + 1]);
            auto bwd = cur;
            bwd[i] = conj_index_rev(cur[i], cur[i + 1]);
            bwd[i + 1] = cur[i];
            for (auto& move : {fwd, bwd})
                if (seen.insert(move).second) queue.push_back(move);
        }
        if (static_cast<long>(queue.size()) > budget)
            throw std::runtime_error("hurwitz_orbit: budget exceeded");
    }
    return queue;
}

std::vector<std::vector<int>> enumerate_reduced_factorizations(
    const FiniteGroup& fg, const std::vector<int>& lr, int elem) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    // left-to-right: peel reflections t with lR(t^-1 g) = lR(g) - 1
    auto rec = [&](auto&& self, int cur) -> void {
        if (lr[cur] == 0) {
            out.push_back(prefix);
            return;
        }
        for (int i = 0; i < fg.nrefl(); ++i) {
            int rest = fg.mulx(fg.inv[fg.reflections[i]], cur);
            if (lr[rest] != lr[cur] - 1) continue;
            prefix.push_back(i);
            self(self, rest);
            prefix.pop_back();
        }
    };
    rec(rec, elem);
    return out;
}

std::vector<Rat> phi_polynomial(const Lattice& lat, int elem) {
    long na = lat.fg->nrefl();
    auto probe = first_full(lat, elem, 2 * na);
    if (probe.ltr < 0)
        throw std::runtime_error("phi_polynomial: series has no full counts");
    long ltr = probe.ltr;
    auto counts = full_series(lat, elem, 2 * na);

    // counts[N] = (1/#W) sum_{i=-na..na} kappa_i i^N, solved exactly
    long dim = 2 * na + 1;
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim));
    std::vector<Rat> b(dim);
    for (long row = 0; row < dim; ++row) {
        for (long col = 0; col < dim; ++col) {
            long node = col - na;
            a[row][col] = row == 0 ? Rat(1) : Rat(ipow(Int(node), row));
        }
        b[row] = Rat(Int(lat.fg->order) * counts[row]);
    }
    auto kappa = solve_square(std::move(a), std::move(b));

    // P(X) = sum kappa_i X^(i+na); Phi = P / (X-1)^ltr, exact division
    std::vector<Rat> p(kappa.begin(), kappa.end());
    for (long k = 0; k < ltr; ++k) {
        std::vector<Rat> q(p.size() - 1, Rat(0));
        for (size_t i = p.size() - 1; i >= 1; --i) {
            q[i - 1] = p[i];
            p[i - 1] += p[i];
        }
        if (p[0] != 0)
            throw std::logic_error("phi_polynomial: inexact division by X-1");
        p = std::move(q);
    }
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

} // namespace wfact
