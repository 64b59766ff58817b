#include "hk/matroid.hpp"

#include "hk/systems.hpp"

#include <algorithm>
#include <numeric>

namespace hk {
namespace {

std::string tuple_str(const std::vector<int>& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        out += (i ? "," : "") + std::to_string(t[i] + 1);
    return out + ")";
}

Elem product_of(Carrier& c, const std::vector<Elem>& xs) {
    Elem acc = xs.empty() ? *c.one() : xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
        auto p = c.mul(acc, xs[i]);
        if (!p) throw std::domain_error("matroid: carrier product is not total");
        acc = *p;
    }
    return acc;
}

} // namespace

std::size_t GPMap::index(const std::vector<int>& tuple) const {
    std::size_t idx = 0;
    for (int e : tuple) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(e);
    return idx;
}

std::vector<std::vector<int>> GPMap::all_tuples() const {
    std::vector<std::vector<int>> out;
    std::vector<int> t(m, 0);
    while (true) {
        out.push_back(t);
        int k = m - 1;
        while (k >= 0 && ++t[k] == n) t[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

json MatroidReport::to_json() const {
    json j = axioms.to_json();
    json b = json::array();
    for (const auto& base : bases) {
        json e = json::array();
        for (int x : base) e.push_back(x + 1);
        b.push_back(std::move(e));
    }
    j["bases"] = std::move(b);
    return j;
}

Elem signed_det(Carrier& c, const std::vector<Elem>& grid, int m) {
    if (m > 8) throw ResourceError("signed_det: arity capped at 8");
    if (!c.one()) throw std::domain_error("signed_det: carrier has no unit");
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    Elem acc = c.zero();
    do {
        // permutation parity by counting inversions
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<Elem> factors;
        for (int i = 0; i < m; ++i) factors.push_back(grid[i * m + perm[i]]);
        Elem term = product_of(c, factors);
        if (inv % 2) term = c.neg(term);
        acc = c.add(acc, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

GPMap minors_gp_map(Carrier& c, const std::vector<Elem>& grid, int m, int n) {
    if (m > 4 || n > 8) throw ResourceError("minors_gp_map: capped at m <= 4, n <= 8");
    GPMap b;
    b.n = n;
    b.m = m;
    std::size_t total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<std::size_t>(n);
    b.values.assign(total, c.zero());
    bool any_tangible = false;
    for (const auto& tuple : b.all_tuples()) {
        std::vector<Elem> minor(m * m);
        for (int r = 0; r < m; ++r)
            for (int k = 0; k < m; ++k) minor[r * m + k] = grid[r * n + tuple[k]];
        Elem v = signed_det(c, minor, m);
        b.set(tuple, v);
        any_tangible = any_tangible || c.tangible(v);
    }
    if (!any_tangible)
        throw std::domain_error("minors_gp_map: no maximal minor is tangible");
    return b;
}

MatroidReport check_gp(Carrier& c, const GPMap& b) {
    MatroidReport rep;
    rep.axioms.structure = "gp-map(n=" + std::to_string(b.n) + ",m=" + std::to_string(b.m) +
                           ") over " + c.name();
    if (b.n > 8 || b.m > 4) throw ResourceError("check_gp: capped at n <= 8, m <= 4");
    auto tuples = b.all_tuples();

    {
        AxiomResult res = AxiomResult::fail("gp-1-some-tangible", {}, "no tangible value");
        for (const auto& t : tuples)
            if (c.tangible(b.at(t))) {
                res = AxiomResult::ok("gp-1-some-tangible");
                break;
            }
        rep.axioms.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok("gp-2-repeats-null");
        for (const auto& t : tuples) {
            bool repeat = false;
            for (std::size_t i = 0; i < t.size() && !repeat; ++i)
                for (std::size_t j = i + 1; j < t.size(); ++j)
                    if (t[i] == t[j]) repeat = true;
            if (repeat && !c.null(b.at(t))) {
                res = AxiomResult::fail("gp-2-repeats-null", {tuple_str(t)});
                break;
            }
        }
        rep.axioms.add(res);
    }
    {
        // adjacent transpositions generate the alternation law
        AxiomResult res = AxiomResult::ok("gp-3-alternating");
        for (const auto& t : tuples) {
            for (int k = 0; k + 1 < b.m; ++k) {
                auto swapped = t;
                std::swap(swapped[k], swapped[k + 1]);
                if (b.at(swapped) != c.neg(b.at(t))) {
                    res = AxiomResult::fail("gp-3-alternating", {tuple_str(t)});
                    break;
                }
            }
            if (!res.pass) break;
        }
        rep.axioms.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok("gp-4-pluecker");
        std::vector<int> e(b.m + 1, 0);
        bool done = false;
        while (!done && res.pass) {
            std::vector<int> f(b.m - 1, 0);
            bool fdone = b.m == 1;
            while (res.pass) {
                Elem acc = c.zero();
                for (int i = 0; i <= b.m && res.pass; ++i) {
                    std::vector<int> left;
                    for (int k = 0; k <= b.m; ++k)
                        if (k != i) left.push_back(e[k]);
                    std::vector<int> right{e[i]};
                    right.insert(right.end(), f.begin(), f.end());
                    auto p = c.mul(b.at(left), b.at(right));
                    if (!p) throw std::domain_error("check_gp: product not total");
                    Elem term = *p;
                    if (i % 2) term = c.neg(term);
                    acc = c.add(acc, term);
                }
                if (!c.null(acc)) {
                    std::vector<std::string> w{tuple_str(e), tuple_str(f)};
                    w.push_back(c.label(acc));
                    res = AxiomResult::fail("gp-4-pluecker", w);
                }
                if (fdone) break;
                int k = b.m - 2;
                while (k >= 0 && ++f[k] == b.n) f[k--] = 0;
                if (k < 0) break;
            }
            int k = b.m;
            while (k >= 0 && ++e[k] == b.n) e[k--] = 0;
            if (k < 0) done = true;
        }
        rep.axioms.add(res);
    }
    for (const auto& t : tuples) {
        if (!c.tangible(b.at(t))) continue;
        auto base = t;
        std::sort(base.begin(), base.end());
        if (std::adjacent_find(base.begin(), base.end()) != base.end()) continue;
        if (std::find(rep.bases.begin(), rep.bases.end(), base) == rep.bases.end())
            rep.bases.push_back(base);
    }
    std::sort(rep.bases.begin(), rep.bases.end());
    return rep;
}

AxiomResult check_exchange(Carrier& c, const std::vector<Elem>& win, const GPMap& b) {
    std::string w;
    if (!is_bipotent(c, win, &w))
        throw std::domain_error("check_exchange: window is not (-)-bipotent at " + w);
    if (!is_cancellative(c, win, &w))
        throw std::domain_error("check_exchange: window is not cancellative at " + w);
    auto tuples = b.all_tuples();
    for (const auto& es : tuples) {
        for (const auto& fs : tuples) {
            // es = (e_1..e_m), fs = (e_0, f_2..f_m)
            auto p = c.mul(b.at(es), b.at(fs));
            if (!p || !c.tangible(*p)) continue;
            bool found = false;
            for (int i = 0; i < b.m && !found; ++i) {
                std::vector<int> left{fs[0]};
                for (int k = 0; k < b.m; ++k)
                    if (k != i) left.push_back(es[k]);
                std::vector<int> right{es[i]};
                for (int k = 1; k < b.m; ++k) right.push_back(fs[k]);
                auto q = c.mul(b.at(left), b.at(right));
                if (q && preorder_leq(c, win, *p, *q)) found = true;
            }
            if (!found)
                return AxiomResult::fail("exchange", {tuple_str(es), tuple_str(fs)});
        }
    }
    return AxiomResult::ok("exchange");
}

int dyadic_valuation(const Rational& q) {
    if (q.is_zero()) throw std::domain_error("dyadic_valuation: zero has no valuation");
    auto v2 = [](std::int64_t n) {
        int v = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++v;
        }
        return v;
    };
    return v2(q.num() < 0 ? -q.num() : q.num()) - v2(q.den());
}

GPMap rational_chirotope(Elem pos, Elem neg_elem, Elem zero_elem,
                         const std::vector<Rational>& grid, int m, int n) {
    QFieldCarrier q;
    std::vector<Elem> qgrid;
    qgrid.reserve(grid.size());
    for (const auto& r : grid) qgrid.push_back(q.of(r));
    GPMap exact = minors_gp_map(q, qgrid, m, n);
    GPMap out;
    out.n = n;
    out.m = m;
    out.values.reserve(exact.values.size());
    for (Elem v : exact.values) {
        const Rational& r = q.enc(v);
        out.values.push_back(r.is_zero() ? zero_elem : (r > Rational(0) ? pos : neg_elem));
    }
    return out;
}

GPMap valuation_minors_map(SupertropicalCarrier& st, const std::vector<Rational>& grid,
                           int m, int n) {
    std::vector<Elem> img;
    img.reserve(grid.size());
    for (const auto& r : grid)
        img.push_back(r.is_zero() ? st.zero()
                                  : st.tangible_of(Rational(-dyadic_valuation(r))));
    return minors_gp_map(st, img, m, n);
}

} // namespace hk
