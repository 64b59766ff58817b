#include "hk/tabulate.hpp"

#include <algorithm>

namespace hk {

FiniteSystemTable tabulate_window(Carrier& c, const std::vector<Elem>& win,
                                  const std::string& name) {
    FiniteSystemTable t;
    t.name = name.empty() ? c.name() : name;
    const int n = static_cast<int>(win.size());
    auto index_of = [&](Elem x) {
        for (int i = 0; i < n; ++i)
            if (win[i] == x) return i;
        return -1;
    };
    for (Elem x : win) t.labels.push_back(c.label(x));
    int zi = index_of(c.zero());
    if (zi < 0) throw std::domain_error("tabulate: window misses zero");
    t.zero = zi;
    if (auto one = c.one()) {
        int oi = index_of(*one);
        if (oi >= 0) t.one = oi;
    }
    t.tangible.resize(n);
    t.neg.resize(n);
    for (int i = 0; i < n; ++i) {
        t.tangible[i] = c.tangible(win[i]);
        int ni = index_of(c.neg(win[i]));
        if (ni < 0)
            throw std::domain_error("tabulate: negation leaves the window at " +
                                    c.label(win[i]));
        t.neg[i] = ni;
    }
    t.add.assign(n, std::vector<Elem>(n));
    t.mul.assign(n, std::vector<std::optional<Elem>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int si = index_of(c.add(win[i], win[j]));
            if (si < 0)
                throw std::domain_error("tabulate: sum leaves the window at (" +
                                        c.label(win[i]) + "," + c.label(win[j]) + ")");
            t.add[i][j] = si;
            if (auto p = c.mul(win[i], win[j])) {
                int pi = index_of(*p);
                if (pi >= 0) t.mul[i][j] = pi;
            }
        }
    std::vector<std::pair<Elem, Elem>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && c.leq(win[i], win[j])) pairs.emplace_back(i, j);
    t.surpass = SurpassSpec::explicit_pairs(std::move(pairs));
    return t;
}

} // namespace hk
