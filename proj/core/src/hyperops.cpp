#include "hk/hyperops.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hk {
namespace {

std::vector<std::string> wit(const FiniteHyperTable& t, std::initializer_list<Elem> xs) {
    std::vector<std::string> out;
    for (Elem x : xs) out.push_back(t.label(x));
    return out;
}

AxiomResult associativity(const FiniteHyperTable& t) {
    const int n = t.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                SubsetVal lhs = t.add_set_elem(t.add[a][b], c);
                SubsetVal rhs = t.add_set_elem(t.add[b][c], a);
                if (lhs != rhs)
                    return AxiomResult::fail(axiom::kAssoc, wit(t, {a, b, c}));
            }
    return AxiomResult::ok(axiom::kAssoc);
}

AxiomResult neutrality(const FiniteHyperTable& t) {
    for (Elem a = 0; a < t.size(); ++a)
        if (t.add[a][t.zero] != SubsetVal::singleton(a))
            return AxiomResult::fail(axiom::kNeutral, wit(t, {a}));
    return AxiomResult::ok(axiom::kNeutral);
}

AxiomResult unique_negatives(const FiniteHyperTable& t) {
    // Def. of the hypernegative: the set {x : 0 in a + x} must be a singleton,
    // and it must agree with the stored negation map.
    for (Elem a = 0; a < t.size(); ++a) {
        std::vector<Elem> negs;
        for (Elem x = 0; x < t.size(); ++x)
            if (t.add[a][x].contains(t.zero)) negs.push_back(x);
        if (negs.size() != 1)
            return AxiomResult::fail(axiom::kUniqueNeg, wit(t, {a}),
                                     negs.empty() ? "no hypernegative"
                                                  : "multiple hypernegatives");
        if (negs[0] != t.neg[a])
            return AxiomResult::fail(axiom::kUniqueNeg, wit(t, {a}),
                                     "stored negation disagrees with the table");
    }
    return AxiomResult::ok(axiom::kUniqueNeg);
}

AxiomResult reversibility(const FiniteHyperTable& t) {
    const int n = t.size();
    for (Elem a1 = 0; a1 < n; ++a1)
        for (Elem a2 = 0; a2 < n; ++a2)
            for (Elem a3 = 0; a3 < n; ++a3) {
                bool lhs = t.add[a2][a3].contains(a1);
                bool rhs = t.add[a1][t.neg[a2]].contains(a3);
                if (lhs != rhs)
                    return AxiomResult::fail(axiom::kReversible, wit(t, {a1, a2, a3}));
            }
    return AxiomResult::ok(axiom::kReversible);
}

} // namespace

VerificationReport check_hypergroup(const FiniteHyperTable& t) {
    VerificationReport r;
    r.structure = t.name;
    r.add(associativity(t));
    r.add(neutrality(t));
    r.add(unique_negatives(t));
    r.add(reversibility(t));
    return r;
}

VerificationReport check_hyperring(const FiniteHyperTable& t) {
    VerificationReport r = check_hypergroup(t);
    const int n = t.size();

    bool mul_ok = true;
    for (Elem a = 0; a < n && mul_ok; ++a) {
        if (t.mul[a][t.one] != a || t.mul[t.one][a] != a) {
            r.add(AxiomResult::fail(axiom::kMulMonoid, wit(t, {a}), "unit"));
            mul_ok = false;
        }
    }
    for (Elem a = 0; a < n && mul_ok; ++a)
        for (Elem b = 0; b < n && mul_ok; ++b)
            for (Elem c = 0; c < n && mul_ok; ++c)
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) {
                    r.add(AxiomResult::fail(axiom::kMulMonoid, wit(t, {a, b, c}),
                                            "associativity"));
                    mul_ok = false;
                }
    if (mul_ok) r.add(AxiomResult::ok(axiom::kMulMonoid));

    {
        bool comm = true;
        for (Elem a = 0; a < n && comm; ++a)
            for (Elem b = 0; b < n && comm; ++b)
                if (t.mul[a][b] != t.mul[b][a]) {
                    r.add(AxiomResult::fail(axiom::kMulComm, wit(t, {a, b})));
                    comm = false;
                }
        if (comm) r.add(AxiomResult::ok(axiom::kMulComm));
    }

    {
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a)
            if (t.mul[t.zero][a] != t.zero || t.mul[a][t.zero] != t.zero) {
                r.add(AxiomResult::fail(axiom::kAbsorbing, wit(t, {t.zero, a})));
                ok = false;
            }
        if (ok) r.add(AxiomResult::ok(axiom::kAbsorbing));
    }

    {
        // single distributivity, sums of length 2 and 3; associativity
        // extends it to longer sums on a finite table
        bool ok = true;
        AxiomResult res = AxiomResult::ok(axiom::kSingleDist, "checked sums of length 2 and 3");
        for (Elem a = 0; a < n && ok; ++a)
            for (Elem s1 = 0; s1 < n && ok; ++s1)
                for (Elem s2 = 0; s2 < n && ok; ++s2) {
                    SubsetVal lhs;
                    for (Elem x : t.add[s1][s2]) lhs.insert(t.mul[a][x]);
                    SubsetVal rhs = t.add[t.mul[a][s1]][t.mul[a][s2]];
                    if (lhs != rhs) {
                        res = AxiomResult::fail(axiom::kSingleDist, wit(t, {a, s1, s2}));
                        ok = false;
                    }
                }
        for (Elem a = 0; a < n && ok; ++a)
            for (Elem s1 = 0; s1 < n && ok; ++s1)
                for (Elem s2 = 0; s2 < n && ok; ++s2)
                    for (Elem s3 = 0; s3 < n && ok; ++s3) {
                        SubsetVal sum = t.add_set_elem(t.add[s1][s2], s3);
                        SubsetVal lhs;
                        for (Elem x : sum) lhs.insert(t.mul[a][x]);
                        SubsetVal rhs = t.add_set_elem(t.add[t.mul[a][s1]][t.mul[a][s2]],
                                                       t.mul[a][s3]);
                        if (lhs != rhs) {
                            res = AxiomResult::fail(axiom::kSingleDist,
                                                    wit(t, {a, s1, s2, s3}), "length 3");
                            ok = false;
                        }
                    }
        r.add(res);
    }

    {
        // hyperfield: nonzero elements form a multiplicative group
        bool field = true;
        std::vector<std::string> w;
        for (Elem a = 0; a < n && field; ++a) {
            if (a == t.zero) continue;
            bool inverse = false;
            for (Elem b = 0; b < n; ++b)
                if (b != t.zero && t.mul[a][b] == t.one && t.mul[b][a] == t.one) inverse = true;
            for (Elem b = 0; b < n; ++b)
                if (b != t.zero && t.mul[a][b] == t.zero) {
                    field = false;
                    w = wit(t, {a, b});
                }
            if (!inverse) {
                field = false;
                w = wit(t, {a});
            }
        }
        r.add(field ? AxiomResult::ok(axiom::kHyperfield)
                    : AxiomResult::fail(axiom::kHyperfield, w));
    }
    return r;
}

AxiomResult check_double_distributivity(const FiniteHyperTable& t) {
    const int n = t.size();
    for (Elem a0 = 0; a0 < n; ++a0)
        for (Elem a1 = 0; a1 < n; ++a1)
            for (Elem b0 = 0; b0 < n; ++b0)
                for (Elem b1 = 0; b1 < n; ++b1) {
                    SubsetVal lhs = t.mul_sets(t.add[a0][a1], t.add[b0][b1]);
                    SubsetVal rhs = t.add_sets(
                        t.add_sets(t.hyperadd(t.mul[a0][b0], t.mul[a1][b0]),
                                   SubsetVal::singleton(t.mul[a0][b1])),
                        SubsetVal::singleton(t.mul[a1][b1]));
                    if (lhs != rhs)
                        return AxiomResult::fail(
                            axiom::kDoubleDist, wit(t, {a0, a1, b0, b1}),
                            subset_label(t, lhs) + " vs " + subset_label(t, rhs));
                }
    return AxiomResult::ok(axiom::kDoubleDist);
}

VerificationReport check_reversibility_equivalence(const FiniteHyperTable& t) {
    VerificationReport r;
    r.structure = t.name;
    AxiomResult direct = reversibility(t);
    direct.name = axiom::kRevEquivRev;
    r.add(direct);

    // S -> -S is an additive morphism on the generated submonoid iff it is
    // one on singleton pairs: -(a + b) = (-a) + (-b).
    AxiomResult morph = AxiomResult::ok(axiom::kRevEquivMorph);
    for (Elem a = 0; a < t.size() && morph.pass; ++a)
        for (Elem b = 0; b < t.size() && morph.pass; ++b) {
            SubsetVal lhs = t.neg_set(t.add[a][b]);
            SubsetVal rhs = t.add[t.neg[a]][t.neg[b]];
            if (lhs != rhs)
                morph = AxiomResult::fail(axiom::kRevEquivMorph, wit(t, {a, b}),
                                          subset_label(t, lhs) + " vs " + subset_label(t, rhs));
        }
    r.add(morph);
    r.add(direct.pass == morph.pass
              ? AxiomResult::ok(axiom::kRevEquivAgree, "both sides agree")
              : AxiomResult::fail(axiom::kRevEquivAgree, {}, "sides disagree"));
    return r;
}

FiniteHyperTable quotient_hyperring(const FiniteHyperTable& ring,
                                    const std::vector<Elem>& subgroup) {
    ring.validate();
    if (!ring.is_single_valued())
        throw std::domain_error("quotient_hyperring: R must be a single-valued ring table");
    const int n = ring.size();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (ring.mul[a][b] != ring.mul[b][a])
                throw std::domain_error("quotient_hyperring: R must be commutative");

    std::set<Elem> g(subgroup.begin(), subgroup.end());
    if (!g.count(ring.one)) throw std::domain_error("quotient_hyperring: G must contain 1");
    for (Elem x : g) {
        bool invertible = false;
        for (Elem y = 0; y < n; ++y)
            if (ring.mul[x][y] == ring.one) invertible = g.count(y) > 0;
        if (!invertible)
            throw std::domain_error("quotient_hyperring: G is not a subgroup of the units");
        for (Elem y : g)
            if (!g.count(ring.mul[x][y]))
                throw std::domain_error("quotient_hyperring: G is not closed under product");
    }

    // orbits aG, represented by their least member
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<Elem>> orbits;
    for (Elem a = 0; a < n; ++a) {
        if (orbit_of[a] >= 0) continue;
        std::vector<Elem> orb;
        for (Elem x : g) orb.push_back(ring.mul[a][x]);
        std::sort(orb.begin(), orb.end());
        orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
        int id = static_cast<int>(orbits.size());
        for (Elem m : orb) orbit_of[m] = id;
        orbits.push_back(std::move(orb));
    }

    FiniteHyperTable q;
    q.name = ring.name + "-mod-G" + std::to_string(g.size());
    for (const auto& orb : orbits) q.labels.push_back(ring.label(orb.front()));
    const int m = static_cast<int>(orbits.size());
    q.zero = orbit_of[ring.zero];
    q.one = orbit_of[ring.one];
    q.neg.resize(m);
    q.add.assign(m, std::vector<SubsetVal>(m));
    q.mul.assign(m, std::vector<Elem>(m));
    auto ring_neg = [&](Elem a) {
        for (Elem y = 0; y < n; ++y)
            if (ring.add[a][y].front() == ring.zero) return y;
        throw std::domain_error("quotient_hyperring: R has no additive inverse for " +
                                ring.label(a));
    };
    for (int i = 0; i < m; ++i) {
        q.neg[i] = orbit_of[ring_neg(orbits[i].front())];
        for (int j = 0; j < m; ++j) {
            std::vector<Elem> sum;
            for (Elem x : orbits[i])
                for (Elem y : orbits[j]) sum.push_back(orbit_of[ring.add[x][y].front()]);
            q.add[i][j] = SubsetVal(std::move(sum));
            q.mul[i][j] = orbit_of[ring.mul[orbits[i].front()][orbits[j].front()]];
        }
    }
    q.validate();
    return q;
}

AxiomResult check_regular_hypergroup(const FiniteHyperTable& t, std::size_t cap) {
    std::vector<SubsetVal> seed;
    for (Elem a = 0; a < t.size(); ++a) seed.push_back(SubsetVal::singleton(a));
    auto closure = closure_under(
        seed, [&](const SubsetVal& x, const SubsetVal& y) { return t.add_sets(x, y); }, cap);
    for (const auto& s : closure) {
        for (Elem a : s) {
            if (s.contains(t.neg[a]) && !s.contains(t.zero))
                return AxiomResult::fail(axiom::kRegular,
                                         {subset_label(t, s), t.label(a)},
                                         "contains a and -a but not 0");
        }
    }
    return AxiomResult::ok(axiom::kRegular);
}

FiniteHyperTable ring_mod(int m) {
    FiniteHyperTable t;
    t.name = "z" + std::to_string(m);
    for (int i = 0; i < m; ++i) t.labels.push_back(std::to_string(i));
    t.zero = 0;
    t.one = m > 1 ? 1 : 0;
    t.neg.resize(m);
    t.add.assign(m, std::vector<SubsetVal>(m));
    t.mul.assign(m, std::vector<Elem>(m));
    for (int a = 0; a < m; ++a) {
        t.neg[a] = (m - a) % m;
        for (int b = 0; b < m; ++b) {
            t.add[a][b] = SubsetVal::singleton((a + b) % m);
            t.mul[a][b] = (a * b) % m;
        }
    }
    return t;
}

} // namespace hk
