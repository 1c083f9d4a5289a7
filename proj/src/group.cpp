#include "wfact/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace wfact {

std::vector<int> reflection_length_table(const FiniteGroup& g) {
    std::vector<int> dist(g.order, -1);
    std::deque<int> queue{g.identity};
    dist[g.identity] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int t : g.reflections) {
            int next = g.mulx(cur, t);
            if (dist[next] < 0) {
                dist[next] = dist[cur] + 1;
                queue.push_back(next);
            }
        }
    }
    return dist;
}

GeneratedSubgroup generate_by_reflections(const FiniteGroup& g,
                                          uint64_t seed_mask) {
    GeneratedSubgroup sub;
    sub.member.assign(g.order, 0);
    sub.member[g.identity] = 1;
    sub.elems.push_back(g.identity);
    std::vector<int> gens;
    for (int i = 0; i < g.nrefl(); ++i)
        if (seed_mask >> i & 1) gens.push_back(g.reflections[i]);
    for (size_t head = 0; head < sub.elems.size(); ++head) {
        int cur = sub.elems[head];
        for (int t : gens) {
            int next = g.mulx(cur, t);
            if (!sub.member[next]) {
                sub.member[next] = 1;
                sub.elems.push_back(next);
            }
        }
    }
    std::sort(sub.elems.begin(), sub.elems.end());
    sub.refl_mask = 0;
    for (int i = 0; i < g.nrefl(); ++i)
        if (sub.member[g.reflections[i]]) sub.refl_mask |= uint64_t{1} << i;
    return sub;
}

uint64_t closure_mask(const FiniteGroup& g, uint64_t seed_mask) {
    return generate_by_reflections(g, seed_mask).refl_mask;
}

std::vector<int> canonical_reduced_factorization(const FiniteGroup& g,
                                                 const std::vector<int>& lr,
                                                 int elem) {
    std::vector<int> factors;
    int cur = elem;
    while (lr[cur] > 0) {
        bool found = false;
        for (int i = 0; i < g.nrefl(); ++i) {
            int rest = g.mulx(g.inv[g.reflections[i]], cur);
            if (lr[rest] == lr[cur] - 1) {
                factors.push_back(i);
                cur = rest;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("canonical_reduced_factorization: stuck");
    }
    return factors;
}

} // namespace wfact
