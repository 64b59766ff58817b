#include "hk/bridge.hpp"

#include "hk/hyperops.hpp"

#include <algorithm>

namespace hk {
namespace {

std::vector<Elem> tzero_of(Carrier& c, const std::vector<Elem>& win) {
    std::vector<Elem> out{c.zero()};
    for (Elem x : win)
        if (c.tangible(x)) out.push_back(x);
    return out;
}

} // namespace

json EliminationProfile::to_json() const {
    json j;
    j["tangibly-balanced"] = tangibly_balanced;
    j["balance-elimination"] = balance_elimination;
    j["nabla-inversion-left"] = nabla_inversion_left;
    j["nabla-inversion-right"] = nabla_inversion_right;
    j["faithfully-balanced"] = faithfully_balanced;
    if (!witnesses.empty()) {
        json w;
        for (auto& [k, v] : witnesses) w[k] = v;
        j["witnesses"] = std::move(w);
    }
    return j;
}

std::unique_ptr<HypersystemCarrier> hypersystem_of(const FiniteHyperTable& t, bool distributed,
                                                   std::size_t cap) {
    VerificationReport r = check_hyperring(t);
    // the hyperfield flag may fail (hyperrings are enough); the core axioms
    // must hold
    for (const char* must : {axiom::kAssoc, axiom::kNeutral, axiom::kUniqueNeg,
                             axiom::kReversible, axiom::kMulMonoid, axiom::kAbsorbing,
                             axiom::kSingleDist})
        if (!r.passed(must))
            throw std::domain_error("hypersystem_of: " + t.name + " fails " +
                                    std::string(must));
    return std::make_unique<HypersystemCarrier>(t, distributed, cap);
}

EliminationProfile elimination_profile(Carrier& c, const std::vector<Elem>& win,
                                       const BalanceContext& ctx) {
    EliminationProfile p;
    const auto t0 = tzero_of(c, win);

    p.tangibly_balanced = true;
    for (Elem b1 : win) {
        for (Elem b2 : win) {
            if (!balances(ctx, b1, b2)) continue;
            bool found = false;
            for (Elem a : t0)
                if (balances(ctx, a, b1) && balances(ctx, a, b2)) {
                    found = true;
                    break;
                }
            if (!found) {
                p.tangibly_balanced = false;
                p.witnesses["tangibly-balanced"] = {c.label(b1), c.label(b2)};
                break;
            }
        }
        if (!p.tangibly_balanced) break;
    }

    p.balance_elimination = true;
    for (Elem a : t0) {
        for (Elem b1 : win) {
            if (!balances(ctx, b1, a)) continue;
            for (Elem b2 : win) {
                if (balances(ctx, a, b2) && !balances(ctx, b1, b2)) {
                    p.balance_elimination = false;
                    p.witnesses["balance-elimination"] = {c.label(b1), c.label(a),
                                                          c.label(b2)};
                    break;
                }
            }
            if (!p.balance_elimination) break;
        }
        if (!p.balance_elimination) break;
    }

    auto inversion = [&](bool left) {
        for (Elem a : t0)
            for (Elem a1 : t0)
                for (Elem b : win) {
                    auto ab = left ? c.mul(a, b) : c.mul(b, a);
                    if (!ab || !balances(ctx, *ab, a1)) continue;
                    bool found = false;
                    std::vector<Elem> candidates = t0;
                    if (auto q = c.div_tangible(a, a1)) candidates.push_back(*q);
                    for (Elem bp : candidates) {
                        auto abp = left ? c.mul(a, bp) : c.mul(bp, a);
                        if (abp && *abp == a1 && balances(ctx, b, bp)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        p.witnesses[left ? "nabla-inversion-left" : "nabla-inversion-right"] =
                            {c.label(a), c.label(b), c.label(a1)};
                        return false;
                    }
                }
        return true;
    };
    p.nabla_inversion_left = inversion(true);
    p.nabla_inversion_right = inversion(false);

    p.faithfully_balanced = true;
    for (std::size_t i = 0; i < win.size() && p.faithfully_balanced; ++i)
        for (std::size_t j = i + 1; j < win.size(); ++j) {
            Elem b = win[i], b2 = win[j];
            bool same = true;
            for (Elem a : t0) {
                if (balances(ctx, a, b) != balances(ctx, a, b2)) {
                    same = false;
                    break;
                }
            }
            if (same) {
                p.faithfully_balanced = false;
                p.witnesses["faithfully-balanced"] = {c.label(b), c.label(b2)};
                break;
            }
        }
    return p;
}

std::vector<Elem> boxplus_nabla(Carrier& c, const std::vector<Elem>& win,
                                const BalanceContext& ctx, const std::vector<Elem>& operands) {
    Elem sum = c.zero();
    for (Elem o : operands) sum = c.add(sum, o);
    std::vector<Elem> out;
    for (Elem a : tzero_of(c, win))
        if (balances(ctx, a, sum)) out.push_back(a);
    return out;
}

std::vector<Elem> boxplus_order(Carrier& c, const std::vector<Elem>& win,
                                const std::vector<Elem>& operands,
                                const BalanceContext* ideal_ctx) {
    Elem sum = c.zero();
    for (Elem o : operands) sum = c.add(sum, o);
    std::vector<Elem> out;
    for (Elem a : win) {
        if (!c.tangible(a)) continue;
        bool le = false;
        if (ideal_ctx) {
            // preceq_I: sum = a + x for some x in I, scanned over the window
            le = a == sum;
            for (Elem x : win)
                if (!le && ideal_ctx->in_I(x) && c.add(a, x) == sum) le = true;
        } else {
            le = c.leq(a, sum);
        }
        if (le) out.push_back(a);
    }
    return out;
}

RecoveredAddition recover_hyperaddition(Carrier& c, const std::vector<Elem>& win,
                                        const BalanceContext& ctx) {
    RecoveredAddition out;
    out.t0 = tzero_of(c, win);
    const int n = static_cast<int>(out.t0.size());
    auto index_of = [&](Elem x) {
        for (int i = 0; i < n; ++i)
            if (out.t0[i] == x) return i;
        return -1;
    };
    out.neg.resize(n);
    for (int i = 0; i < n; ++i) {
        out.neg[i] = index_of(c.neg(out.t0[i]));
        if (out.neg[i] < 0)
            throw std::domain_error("recover: negation leaves T0 at " + c.label(out.t0[i]));
    }
    out.add.assign(n, std::vector<std::vector<int>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto s = boxplus_nabla(c, win, ctx, {out.t0[i], out.t0[j]});
            for (Elem x : s) out.add[i][j].push_back(index_of(x));
        }
    return out;
}

FiniteHyperTable recover_hyperring(Carrier& c, const std::vector<Elem>& win,
                                   const BalanceContext& ctx) {
    EliminationProfile p = elimination_profile(c, win, ctx);
    if (!p.tangibly_balanced || !p.balance_elimination || !p.nabla_inversion())
        throw RecoverRefused("recover: elimination profile fails for " + c.name(), p);
    RecoveredAddition ra = recover_hyperaddition(c, win, ctx);
    const int n = static_cast<int>(ra.t0.size());

    FiniteHyperTable t;
    t.name = "recovered(" + c.name() + ")";
    for (Elem x : ra.t0) t.labels.push_back(c.label(x));
    t.zero = 0;  // tzero_of puts zero first
    auto one = c.one();
    if (!one) throw std::domain_error("recover: carrier has no unit");
    t.one = -1;
    for (int i = 0; i < n; ++i)
        if (ra.t0[i] == *one) t.one = i;
    if (t.one < 0) throw std::domain_error("recover: the unit is not tangible-or-zero");
    t.neg.resize(n);
    for (int i = 0; i < n; ++i) t.neg[i] = ra.neg[i];
    t.add.assign(n, std::vector<SubsetVal>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ra.add[i][j].empty())
                throw std::domain_error("recover: empty hypersum at (" + t.labels[i] + "," +
                                        t.labels[j] + ")");
            t.add[i][j] = SubsetVal(std::vector<Elem>(ra.add[i][j].begin(),
                                                      ra.add[i][j].end()));
        }
    t.mul.assign(n, std::vector<Elem>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = c.mul(ra.t0[i], ra.t0[j]);
            if (!prod)
                throw std::domain_error("recover: product undefined on T0 at (" +
                                        t.labels[i] + "," + t.labels[j] + ")");
            int k = -1;
            for (int q = 0; q < n; ++q)
                if (ra.t0[q] == *prod) k = q;
            if (k < 0)
                throw std::domain_error("recover: product leaves T0 at (" + t.labels[i] +
                                        "," + t.labels[j] + ") = " + c.label(*prod));
            t.mul[i][j] = k;
        }
    t.validate();
    return t;
}

VerificationReport check_assumption_hyper1(Carrier& c, const std::vector<Elem>& win,
                                           const BalanceContext& ctx) {
    VerificationReport r;
    r.structure = c.name() + " hyper1";
    const auto t0 = tzero_of(c, win);
    std::vector<Elem> tang;
    for (Elem a : win)
        if (c.tangible(a)) tang.push_back(a);

    auto leq_i = [&](Elem a, Elem b) {
        // a preceq_I b by window scan
        for (Elem x : win)
            if (ctx.in_I(x) && c.add(a, x) == b) return true;
        return a == b;
    };

    {
        AxiomResult res = AxiomResult::ok("hyper1-1-tangible-minorant");
        for (Elem a0 : tang) {
            for (Elem a1 : tang) {
                Elem s = c.add(a0, a1);
                bool found = false;
                for (Elem a2 : tang)
                    if (leq_i(a2, s)) {
                        found = true;
                        break;
                    }
                if (!found) {
                    res = AxiomResult::fail("hyper1-1-tangible-minorant",
                                            {c.label(a0), c.label(a1)},
                                            "no tangible below " + c.label(s));
                    break;
                }
            }
            if (!res.pass) break;
        }
        r.add(res);
    }
    auto split_condition = [&](bool left, const char* nm) {
        AxiomResult res = AxiomResult::ok(nm);
        for (Elem ap : tang) {
            for (Elem a1 : tang)
                for (Elem a2 : tang)
                    for (Elem a3 : tang) {
                        Elem s = c.add(c.add(a1, a2), a3);
                        if (!leq_i(ap, s)) continue;
                        bool found = false;
                        for (Elem mid : tang) {
                            bool inner = left ? leq_i(mid, c.add(a1, a2)) &&
                                                    leq_i(ap, c.add(mid, a3))
                                              : leq_i(mid, c.add(a2, a3)) &&
                                                    leq_i(ap, c.add(a1, mid));
                            if (inner) {
                                found = true;
                                break;
                            }
                        }
                        if (!found) {
                            res = AxiomResult::fail(nm, {c.label(ap), c.label(a1),
                                                         c.label(a2), c.label(a3)});
                            return res;
                        }
                    }
        }
        return res;
    };
    AxiomResult c2 = split_condition(true, "hyper1-2-left-split");
    AxiomResult c3 = split_condition(false, "hyper1-3-right-split");
    r.add(c2);
    r.add(c3);

    if (r.all_pass()) {
        // build the boxplus_I hypergroup on T0 and check it
        const int n = static_cast<int>(t0.size());
        FiniteHyperTable t;
        t.name = c.name() + "-boxplus-I";
        for (Elem x : t0) t.labels.push_back(c.label(x));
        t.zero = 0;
        t.one = n > 1 ? 1 : 0;
        t.neg.resize(n);
        auto index_of = [&](Elem x) {
            for (int i = 0; i < n; ++i)
                if (t0[i] == x) return i;
            return -1;
        };
        for (int i = 0; i < n; ++i) {
            int ni = index_of(c.neg(t0[i]));
            if (ni < 0) {
                r.add(AxiomResult::fail("hyper1-rebuild", {t.labels[i]},
                                        "negation leaves T0"));
                return r;
            }
            t.neg[i] = ni;
        }
        t.add.assign(n, std::vector<SubsetVal>(n));
        t.mul.assign(n, std::vector<Elem>(n, t.zero));
        bool total = true;
        for (int i = 0; i < n && total; ++i)
            for (int j = 0; j < n && total; ++j) {
                std::vector<Elem> members;
                Elem sum = c.add(t0[i], t0[j]);
                for (int q = 0; q < n; ++q) {
                    if (q == 0) {
                        // zero belongs iff the operands are quasi-negatives
                        if (ctx.in_I(sum)) members.push_back(0);
                    } else if (leq_i(t0[q], sum)) {
                        members.push_back(q);
                    }
                }
                if (members.empty()) total = false;
                t.add[i][j] = SubsetVal(std::move(members));
            }
        if (!total) {
            r.add(AxiomResult::fail("hyper1-rebuild", {}, "empty hypersum"));
            return r;
        }
        VerificationReport hg = check_hypergroup(t);
        for (const char* nm : {axiom::kAssoc, axiom::kNeutral, axiom::kUniqueNeg,
                               axiom::kReversible}) {
            const AxiomResult* a = hg.find(nm);
            AxiomResult copy = *a;
            copy.name = std::string("rebuilt-") + nm;
            r.add(std::move(copy));
        }
    }
    return r;
}

VerificationReport retraction_suite(const FiniteHyperTable& t, std::size_t cap) {
    VerificationReport r;
    r.structure = "retraction(" + t.name + ")";
    auto sys = hypersystem_of(t, false, cap);
    auto win = sys->window();
    BalanceContext ctx = BalanceContext::null_of(*sys);
    FiniteHyperTable back = recover_hyperring(*sys, win, ctx);

    // Psi Phi(H) = H up to the singleton identification a -> {a}
    bool equal = back.size() == t.size();
    std::vector<std::string> w;
    if (equal) {
        std::vector<int> to_orig(back.size(), -1);
        for (int i = 0; i < back.size() && equal; ++i) {
            // recovered labels are "{a}"
            std::string lab = back.labels[i];
            if (lab.size() >= 2 && lab.front() == '{' && lab.back() == '}')
                lab = lab.substr(1, lab.size() - 2);
            auto orig = t.find_label(lab);
            if (!orig) {
                equal = false;
                w = {back.labels[i]};
                break;
            }
            to_orig[i] = *orig;
        }
        if (equal && (to_orig[back.zero] != t.zero || to_orig[back.one] != t.one)) {
            equal = false;
            w = {"zero/one"};
        }
        for (int i = 0; i < back.size() && equal; ++i) {
            if (to_orig[back.neg[i]] != t.neg[to_orig[i]]) {
                equal = false;
                w = {back.labels[i], "neg"};
                break;
            }
            for (int j = 0; j < back.size() && equal; ++j) {
                if (to_orig[back.mul[i][j]] != t.mul[to_orig[i]][to_orig[j]]) {
                    equal = false;
                    w = {back.labels[i], back.labels[j], "mul"};
                    break;
                }
                std::vector<Elem> mapped;
                for (Elem x : back.add[i][j]) mapped.push_back(to_orig[x]);
                if (SubsetVal(mapped) != t.add[to_orig[i]][to_orig[j]]) {
                    equal = false;
                    w = {back.labels[i], back.labels[j], "add"};
                    break;
                }
            }
        }
    } else {
        w = {"carrier size " + std::to_string(back.size()) + " vs " +
             std::to_string(t.size())};
    }
    r.add(equal ? AxiomResult::ok("retraction-equality")
                : AxiomResult::fail("retraction-equality", w));

    EliminationProfile p = elimination_profile(*sys, win, ctx);
    r.add(p.faithfully_balanced
              ? AxiomResult::ok("faithfully-balanced")
              : AxiomResult::fail("faithfully-balanced", p.witnesses["faithfully-balanced"]));
    return r;
}

} // namespace hk
