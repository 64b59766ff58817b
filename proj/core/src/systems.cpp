#include "hk/systems.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hk {
namespace {

std::vector<Elem> tangibles_of(Carrier& c, const std::vector<Elem>& win) {
    std::vector<Elem> out;
    for (Elem x : win)
        if (c.tangible(x)) out.push_back(x);
    return out;
}

std::vector<Elem> tzero_of(Carrier& c, const std::vector<Elem>& win) {
    std::vector<Elem> out{c.zero()};
    for (Elem x : win)
        if (c.tangible(x)) out.push_back(x);
    return out;
}

bool member(const std::vector<Elem>& xs, Elem x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::string tuple_label(Carrier& c, std::initializer_list<Elem> xs) {
    std::string out = "(";
    bool first = true;
    for (Elem x : xs) {
        if (!first) out += ",";
        out += c.label(x);
        first = false;
    }
    return out + ")";
}

} // namespace

json TripleProfile::to_json(const Carrier& c) const {
    json j;
    j["kind"] = kind_name();
    if (!kind_witness.empty()) j["kind-witness"] = kind_witness;
    j["bipotent"] = bipotent;
    j["strongly-bipotent"] = strongly_bipotent;
    j["metatangible"] = metatangible;
    j["shallow"] = shallow;
    j["circ-idempotent"] = circ_idempotent;
    j["geometric"] = geometric;
    j["strongly-geometric"] = strongly_geometric;
    j["regular"] = regular;
    j["uniquely-negated"] = uniquely_negated;
    j["cancellative"] = cancellative;
    if (e) j["e"] = c.label(*e);
    if (e_prime) j["e-prime"] = c.label(*e_prime);
    if (height_bound) j["height-bound"] = *height_bound;
    if (!height_unreached.empty()) j["height-unreached"] = height_unreached;
    if (!witnesses.empty()) {
        json w;
        for (auto& [k, v] : witnesses) w[k] = v;
        j["witnesses"] = std::move(w);
    }
    return j;
}

std::vector<Elem> quasi_zeros(Carrier& c, const std::vector<Elem>& win) {
    std::vector<Elem> out;
    for (Elem b : win) out.push_back(c.quasi_zero(b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VerificationReport check_triple(Carrier& c, const std::vector<Elem>& win) {
    VerificationReport r;
    r.structure = c.name();
    const auto tang = tangibles_of(c, win);
    const auto t0 = tzero_of(c, win);

    {
        AxiomResult res = AxiomResult::ok(law::kNegInvolution);
        for (Elem b : win)
            if (c.neg(c.neg(b)) != b) {
                res = AxiomResult::fail(law::kNegInvolution, {c.label(b)});
                break;
            }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kNegAdditive);
        for (Elem a : win) {
            for (Elem b : win)
                if (c.neg(c.add(a, b)) != c.add(c.neg(a), c.neg(b))) {
                    res = AxiomResult::fail(law::kNegAdditive, {c.label(a), c.label(b)});
                    break;
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kNegAction);
        for (Elem a : tang) {
            for (Elem b : win) {
                auto p = c.mul(a, b);
                if (!p) continue;
                auto p1 = c.mul(c.neg(a), b);
                auto p2 = c.mul(a, c.neg(b));
                if ((p1 && *p1 != c.neg(*p)) || (p2 && *p2 != c.neg(*p))) {
                    res = AxiomResult::fail(law::kNegAction, {c.label(a), c.label(b)});
                    break;
                }
            }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        // reachability of the window from T0 by iterated addition,
        // depth-capped by the window size
        std::set<Elem> reach(t0.begin(), t0.end());
        for (std::size_t round = 0; round <= win.size(); ++round) {
            std::vector<Elem> fresh;
            for (Elem a : reach)
                for (Elem t : t0) {
                    Elem s = c.add(a, t);
                    if (!reach.count(s)) fresh.push_back(s);
                }
            if (fresh.empty()) break;
            reach.insert(fresh.begin(), fresh.end());
        }
        std::vector<std::string> unreached;
        for (Elem b : win)
            if (!reach.count(b)) unreached.push_back(c.label(b));
        r.add(unreached.empty() ? AxiomResult::ok(law::kGeneration)
                                : AxiomResult::fail(law::kGeneration, unreached));
    }
    {
        AxiomResult res = AxiomResult::ok(law::kTangibleQuasi);
        const auto qz = quasi_zeros(c, win);
        for (Elem a : tang)
            if (member(qz, a)) {
                res = AxiomResult::fail(law::kTangibleQuasi, {c.label(a)},
                                        "tangible quasi-zero");
                break;
            }
        r.add(res);
    }
    return r;
}

bool surpasses(Carrier& c, Elem b1, Elem b2) { return c.leq(b1, b2); }

bool surpasses_ideal(Carrier& c, const std::vector<Elem>& candidates,
                     const std::function<bool(Elem)>& in_I, Elem b1, Elem b2) {
    for (Elem x : candidates)
        if (in_I(x) && c.add(b1, x) == b2) return true;
    return false;
}

VerificationReport check_surpassing_axioms(Carrier& c, const std::vector<Elem>& win) {
    VerificationReport r;
    r.structure = c.name();
    const int n = static_cast<int>(win.size());
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) le[i][j] = c.leq(win[i], win[j]);

    {
        AxiomResult res = AxiomResult::ok(law::kReflexive);
        for (int i = 0; i < n; ++i)
            if (!le[i][i]) {
                res = AxiomResult::fail(law::kReflexive, {c.label(win[i])});
                break;
            }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kTransitive);
        for (int i = 0; i < n && res.pass; ++i)
            for (int j = 0; j < n && res.pass; ++j)
                for (int k = 0; k < n; ++k)
                    if (le[i][j] && le[j][k] && !le[i][k]) {
                        res = AxiomResult::fail(
                            law::kTransitive,
                            {c.label(win[i]), c.label(win[j]), c.label(win[k])});
                        break;
                    }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kModuleAdd);
        std::vector<std::pair<int, int>> le_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][j]) le_pairs.emplace_back(i, j);
        for (auto [i, j] : le_pairs) {
            for (auto [k, l] : le_pairs)
                if (!c.leq(c.add(win[i], win[k]), c.add(win[j], win[l]))) {
                    res = AxiomResult::fail(law::kModuleAdd,
                                            {c.label(win[i]), c.label(win[j]),
                                             c.label(win[k]), c.label(win[l])});
                    break;
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kModuleAct);
        for (Elem a : win) {
            if (!c.tangible(a)) continue;
            for (int i = 0; i < n && res.pass; ++i)
                for (int j = 0; j < n; ++j) {
                    if (!le[i][j]) continue;
                    auto p = c.mul(a, win[i]);
                    auto q = c.mul(a, win[j]);
                    if (p && q && !c.leq(*p, *q)) {
                        res = AxiomResult::fail(
                            law::kModuleAct,
                            {c.label(a), c.label(win[i]), c.label(win[j])});
                        break;
                    }
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kZeroQuasi);
        for (Elem b : win)
            if (!c.leq(c.zero(), c.quasi_zero(b))) {
                res = AxiomResult::fail(law::kZeroQuasi, {c.label(b)});
                break;
            }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kNegMonotone);
        for (int i = 0; i < n && res.pass; ++i)
            for (int j = 0; j < n; ++j)
                if (le[i][j] && !c.leq(c.neg(win[i]), c.neg(win[j]))) {
                    res = AxiomResult::fail(law::kNegMonotone,
                                            {c.label(win[i]), c.label(win[j])});
                    break;
                }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kTangibleEq);
        const auto t0 = tzero_of(c, win);
        for (Elem a : t0) {
            for (Elem b : t0)
                if (a != b && c.leq(a, b)) {
                    res = AxiomResult::fail(law::kTangibleEq, {c.label(a), c.label(b)});
                    break;
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kStrong);
        for (Elem b : win) {
            for (Elem a : win)
                if (c.tangible(a) && b != a && c.leq(b, a)) {
                    res = AxiomResult::fail(law::kStrong, {c.label(b), c.label(a)});
                    break;
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok(law::kSystemUnique);
        const auto t0 = tzero_of(c, win);
        for (Elem a : t0) {
            for (Elem b : t0)
                if (a != b && c.null(c.sub(a, b))) {
                    res = AxiomResult::fail(law::kSystemUnique, {c.label(a), c.label(b)});
                    break;
                }
            if (!res.pass) break;
        }
        r.add(res);
    }
    return r;
}

std::vector<Elem> null_set(Carrier& c, const std::vector<Elem>& win) {
    std::vector<Elem> out;
    for (Elem b : win)
        if (c.null(b)) out.push_back(b);
    return out;
}

bool balances(const BalanceContext& ctx, Elem b1, Elem b2) {
    Carrier& c = *ctx.carrier;
    return ctx.in_I(c.add(b1, c.neg(b2)));
}

std::optional<int> height(Carrier& c, const std::vector<Elem>& win, Elem x, int cap) {
    if (x == c.zero()) return 0;
    const auto tang = tangibles_of(c, win);
    if (cap < 0) cap = static_cast<int>(win.size()) + 3;
    std::set<Elem> level(tang.begin(), tang.end());
    std::set<Elem> seen = level;
    for (int h = 1; h <= cap; ++h) {
        if (level.count(x)) return h;
        std::set<Elem> next;
        for (Elem b : level)
            for (Elem t : tang) next.insert(c.add(b, t));
        level = std::move(next);
        // plateau detection: no new sums means no element will ever be found
        std::size_t before = seen.size();
        seen.insert(level.begin(), level.end());
        if (seen.size() == before && !level.count(x)) return std::nullopt;
    }
    return std::nullopt;
}

bool is_bipotent(Carrier& c, const std::vector<Elem>& win, std::string* witness) {
    for (Elem a : win) {
        if (!c.tangible(a)) continue;
        for (Elem b : win) {
            if (!c.tangible(b) || b == c.neg(a)) continue;
            Elem s = c.add(a, b);
            if (s != a && s != b) {
                if (witness) *witness = tuple_label(c, {a, b});
                return false;
            }
        }
    }
    return true;
}

bool is_cancellative(Carrier& c, const std::vector<Elem>& win, std::string* witness) {
    for (Elem a : win) {
        if (!c.tangible(a)) continue;
        for (Elem x : win)
            for (Elem y : win) {
                if (x == y) continue;
                auto px = c.mul(a, x);
                auto py = c.mul(a, y);
                if (px && py && *px == *py) {
                    if (witness) *witness = tuple_label(c, {a, x, y});
                    return false;
                }
            }
    }
    return true;
}

bool uniquely_negated(Carrier& c, const std::vector<Elem>& win, std::string* witness) {
    const auto qz = quasi_zeros(c, win);
    for (Elem a : win) {
        if (!c.tangible(a)) continue;
        for (Elem b : win) {
            if (!c.tangible(b) || a == b) continue;
            if (member(qz, c.sub(a, b))) {
                if (witness) *witness = tuple_label(c, {a, b});
                return false;
            }
        }
    }
    return true;
}

TripleProfile classify(Carrier& c, const std::vector<Elem>& win) {
    TripleProfile p;
    const auto tang = tangibles_of(c, win);
    const Elem zero = c.zero();

    // kind of the negation map
    {
        std::optional<Elem> one = c.one();
        bool neg_one_fixed = one ? c.neg(*one) == *one : !tang.empty() && c.neg(tang[0]) == tang[0];
        bool all_fixed = true, none_fixed = true;
        std::string w;
        for (Elem a : tang) {
            if (c.neg(a) == a) none_fixed = false;
            else all_fixed = false;
            if (w.empty() && (neg_one_fixed ? c.neg(a) != a : c.neg(a) == a))
                w = c.label(a);
        }
        if (neg_one_fixed && all_fixed) p.kind = TripleProfile::Kind::First;
        else if (!neg_one_fixed && none_fixed) p.kind = TripleProfile::Kind::Second;
        else {
            p.kind = TripleProfile::Kind::MixedWitness;
            p.kind_witness = w;
        }
    }

    std::string w;
    p.bipotent = is_bipotent(c, win, &w);
    if (!p.bipotent) p.witnesses["bipotent"] = w;
    p.cancellative = is_cancellative(c, win, &w);
    if (!p.cancellative) p.witnesses["cancellative"] = w;
    p.uniquely_negated = uniquely_negated(c, win, &w);
    if (!p.uniquely_negated) p.witnesses["uniquely-negated"] = w;

    if (auto one = c.one()) {
        p.e = c.quasi_zero(*one);
        p.e_prime = c.add(*p.e, *one);
        p.strongly_bipotent = p.bipotent && *p.e_prime == *p.e;
        p.circ_idempotent = c.quasi_zero(*p.e) == *p.e;
    }

    {
        p.metatangible = p.uniquely_negated;
        for (Elem a : tang) {
            for (Elem b : tang) {
                if (b == c.neg(a)) continue;
                if (!c.tangible(c.add(a, b))) {
                    p.metatangible = false;
                    p.witnesses["metatangible"] = tuple_label(c, {a, b});
                    break;
                }
            }
            if (!p.metatangible) break;
        }
    }
    {
        p.shallow = true;
        const auto qz_tang = [&] {
            std::vector<Elem> out;
            for (Elem a : tang) out.push_back(c.quasi_zero(a));
            return out;
        }();
        for (Elem b : win) {
            if (b == zero || c.tangible(b) || member(qz_tang, b)) continue;
            p.shallow = false;
            p.witnesses["shallow"] = c.label(b);
            break;
        }
    }
    {
        p.geometric = true;
        p.strongly_geometric = true;
        for (Elem t : tang) {
            for (Elem a : win) {
                if (!c.tangible(a)) continue;
                for (Elem b : win) {
                    if (c.add(a, b) != t) continue;
                    if (b != t && a != t) {
                        if (p.geometric) p.witnesses["geometric"] = tuple_label(c, {t, a, b});
                        p.geometric = false;
                    }
                    if (!(b == t && a == t)) {
                        if (p.strongly_geometric)
                            p.witnesses["strongly-geometric"] = tuple_label(c, {t, a, b});
                        p.strongly_geometric = false;
                    }
                }
            }
        }
    }
    {
        // (-)-regular: (-)a1 + a2 + a3 and a1 + a2 + a3 both null force
        // a2 = (-)a3
        p.regular = true;
        for (Elem a1 : tang) {
            for (Elem a2 : tang) {
                for (Elem a3 : tang) {
                    Elem s = c.add(a2, a3);
                    if (c.null(c.add(c.neg(a1), s)) && c.null(c.add(a1, s)) &&
                        a2 != c.neg(a3)) {
                        p.regular = false;
                        p.witnesses["regular"] = tuple_label(c, {a1, a2, a3});
                        break;
                    }
                }
                if (!p.regular) break;
            }
            if (!p.regular) break;
        }
    }
    {
        int max_h = 0;
        for (Elem b : win) {
            auto h = height(c, win, b);
            if (!h) p.height_unreached.push_back(c.label(b));
            else max_h = std::max(max_h, *h);
        }
        if (p.height_unreached.empty()) p.height_bound = max_h;
    }
    return p;
}

UniformPresentation uniform_presentation(Carrier& c, const std::vector<Elem>& win, Elem b) {
    std::string w;
    if (!is_bipotent(c, win, &w))
        throw std::domain_error("uniform_presentation: window is not (-)-bipotent at " + w);
    if (!is_cancellative(c, win, &w))
        throw std::domain_error("uniform_presentation: window is not cancellative at " + w);
    if (b == c.zero()) throw std::domain_error("uniform_presentation: b must be nonzero");
    if (c.tangible(b)) return {1, b, false};
    const auto tang = tangibles_of(c, win);
    for (Elem a : tang)
        if (c.quasi_zero(a) == b) return {2, a, true};
    const int cap = static_cast<int>(win.size()) + 3;
    for (Elem a : tang) {
        Elem acc = a;
        for (int m = 2; m <= cap; ++m) {
            acc = c.add(acc, a);
            if (m != 2 && acc == b) return {m, a, false};
        }
    }
    throw std::domain_error("uniform_presentation: no presentation of " + c.label(b) +
                            " within height " + std::to_string(cap));
}

bool preorder_leq(Carrier& c, const std::vector<Elem>& win, Elem x, Elem y) {
    for (Elem d : win)
        if (c.add(x, d) == y || c.add(c.neg(x), d) == y) return true;
    return false;
}

IrreducibleCore irreducible_core(Carrier& c, const std::vector<Elem>& win, bool strong) {
    IrreducibleCore core;
    for (Elem t : win) {
        if (!c.tangible(t)) continue;
        bool irr = true;
        for (Elem a : win) {
            if (!c.tangible(a)) continue;
            for (Elem b : win) {
                if (c.add(a, b) != t) continue;
                if (strong ? !(a == t && b == t) : !(a == t || b == t)) {
                    irr = false;
                    break;
                }
            }
            if (!irr) break;
        }
        if (irr) core.tangibles.push_back(t);
    }
    // additive span of the irreducible tangibles (plus zero)
    std::set<Elem> span(core.tangibles.begin(), core.tangibles.end());
    span.insert(c.zero());
    for (std::size_t round = 0; round <= win.size(); ++round) {
        std::vector<Elem> fresh;
        for (Elem a : span)
            for (Elem t : core.tangibles) {
                Elem s = c.add(a, t);
                if (!span.count(s)) fresh.push_back(s);
            }
        if (fresh.empty()) break;
        span.insert(fresh.begin(), fresh.end());
    }
    core.elements.assign(span.begin(), span.end());
    return core;
}

VerificationReport check_fuzzy_ring(Carrier& c, const std::vector<Elem>& win, Elem eps,
                                    const std::vector<Elem>& k0) {
    auto one = c.one();
    if (!one) throw std::domain_error("check_fuzzy_ring: carrier has no unit");
    auto in_k0 = [k0](Elem x) { return member(k0, x); };
    auto times = [&c](Elem a, Elem b) {
        auto p = c.mul(a, b);
        if (!p) throw std::domain_error("check_fuzzy_ring: multiplication must be total");
        return *p;
    };
    std::vector<Elem> units;
    for (Elem a : win)
        for (Elem b : win)
            if (times(a, b) == *one && times(b, a) == *one) {
                units.push_back(a);
                break;
            }
    auto is_unit = [units](Elem x) { return member(units, x); };
    return check_fuzzy_ring(c, win, eps, in_k0, is_unit);
}

VerificationReport check_fuzzy_ring(Carrier& c, const std::vector<Elem>& win, Elem eps,
                                    const std::function<bool(Elem)>& in_k0,
                                    const std::function<bool(Elem)>& is_unit) {
    VerificationReport r;
    r.structure = c.name() + " fuzzy-ring";
    auto one = c.one();
    if (!one) throw std::domain_error("check_fuzzy_ring: carrier has no unit");
    if (in_k0(*one)) throw std::domain_error("check_fuzzy_ring: K0 contains the unit, not a proper ideal");
    if (!in_k0(c.zero())) throw std::domain_error("check_fuzzy_ring: K0 must contain zero");
    auto times = [&](Elem a, Elem b) {
        auto p = c.mul(a, b);
        if (!p) throw std::domain_error("check_fuzzy_ring: multiplication must be total");
        return *p;
    };

    std::vector<Elem> units;
    for (Elem a : win)
        if (is_unit(a)) units.push_back(a);

    r.add(times(eps, eps) == *one
              ? AxiomResult::ok("fuzzy-1-eps-squared")
              : AxiomResult::fail("fuzzy-1-eps-squared", {c.label(eps)}));
    {
        AxiomResult res = AxiomResult::ok("fuzzy-2-eps-characterized");
        for (Elem a : win) {
            bool lhs = is_unit(a) && in_k0(c.add(*one, a));
            if (lhs != (a == eps)) {
                res = AxiomResult::fail("fuzzy-2-eps-characterized", {c.label(a)});
                break;
            }
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok("fuzzy-3-product-compat");
        for (Elem a1 : win) {
            for (Elem a2 : win) {
                if (!in_k0(c.add(a1, a2))) continue;
                for (Elem a3 : win) {
                    for (Elem a4 : win) {
                        if (!in_k0(c.add(a3, a4))) continue;
                        Elem v = c.add(times(a1, a3), times(eps, times(a2, a4)));
                        if (!in_k0(v)) {
                            res = AxiomResult::fail("fuzzy-3-product-compat",
                                                    {c.label(a1), c.label(a2), c.label(a3),
                                                     c.label(a4)},
                                                    "lands at " + c.label(v));
                            break;
                        }
                    }
                    if (!res.pass) break;
                }
                if (!res.pass) break;
            }
            if (!res.pass) break;
        }
        r.add(res);
    }
    {
        AxiomResult res = AxiomResult::ok("fuzzy-4-distribution");
        for (Elem a1 : win) {
            for (Elem a2 : win)
                for (Elem a3 : win)
                    for (Elem a4 : win) {
                        if (!in_k0(c.add(a1, times(a2, c.add(a3, a4))))) continue;
                        if (!in_k0(c.add(c.add(a1, times(a2, a3)), times(a2, a4)))) {
                            res = AxiomResult::fail("fuzzy-4-distribution",
                                                    {c.label(a1), c.label(a2), c.label(a3),
                                                     c.label(a4)});
                            goto done4;
                        }
                    }
        }
    done4:
        r.add(res);
    }
    {
        // coherence: the units span (A,+)
        std::set<Elem> reach(units.begin(), units.end());
        reach.insert(c.zero());
        for (std::size_t round = 0; round <= win.size(); ++round) {
            std::vector<Elem> fresh;
            for (Elem a : reach)
                for (Elem u : units)
                    if (Elem s = c.add(a, u); !reach.count(s)) fresh.push_back(s);
            if (fresh.empty()) break;
            reach.insert(fresh.begin(), fresh.end());
        }
        std::vector<std::string> unreached;
        for (Elem b : win)
            if (!reach.count(b)) unreached.push_back(c.label(b));
        r.add(unreached.empty() ? AxiomResult::ok("fuzzy-coherent")
                                : AxiomResult::fail("fuzzy-coherent", unreached));
    }
    return r;
}

FiniteSystemTable preunit_induced_mul(const FiniteSystemTable& t, Elem u) {
    const int n = t.size();
    auto act = [&](Elem a, Elem b) -> std::optional<Elem> { return t.mul[a][b]; };
    std::vector<Elem> t0{t.zero};
    for (Elem a = 0; a < n; ++a)
        if (t.tangible[a]) t0.push_back(a);

    // preunit axioms
    for (Elem a : t0) {
        auto au = act(a, u), ua = act(u, a);
        if (!au || !ua)
            throw std::domain_error("preunit: action at " + t.label(a) + "*u undefined");
        if (*au != *ua)
            throw std::domain_error("preunit: au != ua at a=" + t.label(a));
        for (Elem b : t0) {
            if (a == b) continue;
            auto bu = act(b, u);
            if (bu && *bu == *au)
                throw std::domain_error("preunit: au = a'u for distinct a=" + t.label(a) +
                                        " a'=" + t.label(b));
        }
    }
    // spanning: every element is a sum of elements of T0 u, recorded as one
    // decomposition per element
    std::map<Elem, std::vector<Elem>> dec;
    dec[t.zero] = {};
    for (Elem a : t0) {
        Elem au = *act(a, u);
        if (!dec.count(au)) dec[au] = {a};
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::map<Elem, std::vector<Elem>> next = dec;
        for (auto& [b, db] : dec)
            for (Elem a : t0) {
                Elem s = t.add[b][*act(a, u)];
                if (!next.count(s)) {
                    auto d = db;
                    d.push_back(a);
                    next[s] = std::move(d);
                    grew = true;
                }
            }
        dec = std::move(next);
    }
    for (Elem b = 0; b < n; ++b)
        if (!dec.count(b))
            throw std::domain_error("preunit: " + t.label(b) +
                                    " is not in the additive span of Tu");

    FiniteSystemTable out = t;
    out.name = t.name + "+mul";
    auto t_mul = [&](Elem a, Elem b) -> Elem {
        // product inside the tangible monoid (plus zero)
        auto p = t.mul[a][b];
        if (!p) throw std::domain_error("preunit: tangible product undefined");
        return *p;
    };
    for (Elem b1 = 0; b1 < n; ++b1)
        for (Elem b2 = 0; b2 < n; ++b2) {
            Elem acc = t.zero;
            for (Elem a1 : dec[b1])
                for (Elem a2 : dec[b2]) acc = t.add[acc][*act(t_mul(a1, a2), u)];
            out.mul[b1][b2] = acc;
        }

    // sanity per the construction: associativity, double distributivity, unit
    for (Elem a = 0; a < n; ++a) {
        if (*out.mul[a][u] != a || *out.mul[u][a] != a)
            throw ValidationError("preunit-unit", t.label(a));
        for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
                if (*out.mul[*out.mul[a][b]][c] != *out.mul[a][*out.mul[b][c]])
                    throw ValidationError("preunit-associative",
                                          t.label(a) + "," + t.label(b) + "," + t.label(c));
                if (*out.mul[a][t.add[b][c]] != t.add[*out.mul[a][b]][*out.mul[a][c]] ||
                    *out.mul[t.add[b][c]][a] != t.add[*out.mul[b][a]][*out.mul[c][a]])
                    throw ValidationError("preunit-distributive",
                                          t.label(a) + "," + t.label(b) + "," + t.label(c));
            }
        }
    }
    return out;
}

} // namespace hk
