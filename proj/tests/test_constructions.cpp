#include <doctest.h>

#include "hk/catalog.hpp"
#include "hk/convolution.hpp"
#include "hk/families.hpp"
#include "hk/hypersystem.hpp"
#include "hk/iso.hpp"
#include "hk/layered.hpp"
#include "hk/symmetrize.hpp"
#include "hk/systems.hpp"
#include "hk/table_carrier.hpp"

using namespace hk;

namespace {
std::vector<Rational> grades4() {
    return {Rational(0), Rational(1), Rational(2), Rational(3)};
}
}

TEST_CASE("symmetrize(Boolean) is the sign semiring") {
    auto boolean = std::make_shared<TableCarrier>(boolean_semiring_table());
    SymmetrizedCarrier sym(boolean, true);
    auto win = sym.window(0);
    CHECK(win.size() == 4);
    TableCarrier l(sign_semiring_table());
    auto iso = find_isomorphism(sym, win, l, l.window());
    REQUIRE(iso.has_value());
    // (1|0) -> 1, (0|1) -> -1, (1|1) -> inf
    CHECK((*iso)[sym.pair_of(1, 0)] == 1);
    CHECK((*iso)[sym.pair_of(0, 1)] == 2);
    CHECK((*iso)[sym.pair_of(1, 1)] == 3);
}

TEST_CASE("N-hat multiplication follows the twist law") {
    auto nat = std::make_shared<NaturalsCarrier>();
    SymmetrizedCarrier nh(nat, false);
    // (m1(-)n1)(m2(-)n2) = (m1m2+n1n2)(-)(m1n2+n1m2)
    for (long long m1 = 0; m1 <= 3; ++m1)
        for (long long n1 = 0; n1 <= 3; ++n1)
            for (long long m2 = 0; m2 <= 3; ++m2)
                for (long long n2 = 0; n2 <= 3; ++n2) {
                    Elem a = nh.pair_of(nat->of(m1), nat->of(n1));
                    Elem b = nh.pair_of(nat->of(m2), nat->of(n2));
                    Elem p = *nh.mul(a, b);
                    CHECK(p == nh.pair_of(nat->of(m1 * m2 + n1 * n2),
                                          nat->of(m1 * n2 + n1 * m2)));
                }
    CHECK(check_triple(nh, nh.window(0)).all_pass());
    CHECK(check_surpassing_axioms(nh, nh.window(0)).all_pass());
}

TEST_CASE("switch negation fixes the zero pair") {
    auto nat = std::make_shared<NaturalsCarrier>();
    SymmetrizedCarrier nh(nat, false);
    CHECK(nh.neg(nh.zero()) == nh.zero());
    Elem x = nh.pair_of(nat->of(2), nat->of(1));
    CHECK(nh.neg(x) == nh.pair_of(nat->of(1), nat->of(2)));
    CHECK(nh.neg(nh.neg(x)) == x);
}

TEST_CASE("bipotent symmetrization case split over max-plus") {
    auto mp = std::make_shared<MaxplusCarrier>();
    SymmetrizedCarrier s(mp, true);
    Elem a2 = mp->of(Rational(2)), a1 = mp->of(Rational(1));
    Elem pos2 = s.pair_of(a2, mp->zero());
    Elem neg2 = s.pair_of(mp->zero(), a2);
    Elem pos1 = s.pair_of(a1, mp->zero());
    Elem circ2 = s.pair_of(a2, a2);
    Elem circ1 = s.pair_of(a1, a1);
    CHECK(s.add(pos2, neg2) == circ2);            // (a,0)+(0,a) = (a,a)
    CHECK(s.add(pos2, s.neg(pos1)) == pos2);      // dominant tangible wins
    CHECK(s.add(pos2, circ1) == pos2);            // (a,0)+(a',a') = (a,0), a dominant
    CHECK(s.add(pos1, circ2) == circ2);           // quasi-zero dominates
    CHECK(s.add(pos2, circ2) == circ2);           // equal value: absorbed by the circ
    CHECK(check_triple(s, s.window(0)).all_pass());
    CHECK(check_surpassing_axioms(s, s.window(0)).all_pass());
    TripleProfile p = classify(s, s.window(0));
    CHECK(p.kind == TripleProfile::Kind::Second);
    CHECK(p.bipotent);
    CHECK(p.shallow);
}

TEST_CASE("layered addition is grade-lexicographic") {
    auto layers = std::make_shared<TableCarrier>(truncate_naturals(2));
    LayeredCarrier lc(layers, grades4());
    Elem a = lc.at(1, Rational(2)), b = lc.at(1, Rational(1));
    CHECK(lc.add(a, b) == a);  // higher grade wins
    CHECK(lc.add(b, a) == a);
    CHECK(lc.add(a, a) == lc.at(2, Rational(2)));  // equal grades add layers
    CHECK(lc.add(a, lc.zero()) == a);
}

TEST_CASE("layered over Krasner layers is the supertropical window") {
    auto layers = std::make_shared<HypersystemCarrier>(krasner_table(), false);
    auto lc = std::make_shared<LayeredCarrier>(layers, grades4());
    SupertropicalCarrier st;
    auto iso = find_isomorphism(*lc, lc->window(0), st, st.window(0));
    REQUIRE(iso.has_value());
    CHECK(check_triple(*lc, lc->window(0)).all_pass());
    CHECK(check_surpassing_axioms(*lc, lc->window(0)).all_pass());
}

TEST_CASE("layered over the sign semiring is the symmetrized max-plus window") {
    FiniteSystemTable l = sign_semiring_table();
    auto layers = std::make_shared<TableCarrier>(l);
    auto lc = std::make_shared<LayeredCarrier>(layers, grades4());
    auto mp = std::make_shared<MaxplusCarrier>();
    SymmetrizedCarrier sym(mp, true);
    // matching value windows: the max-plus window(0) uses values 0..3
    auto iso = find_isomorphism(*lc, lc->window(0), sym, sym.window(0));
    REQUIRE(iso.has_value());
}

TEST_CASE("layered preserves the kind of the layer negation") {
    auto kr_layers = std::make_shared<HypersystemCarrier>(krasner_table(), false);
    LayeredCarrier first(kr_layers, grades4());
    CHECK(classify(first, first.window(0)).kind == TripleProfile::Kind::First);
    auto sign_layers = std::make_shared<TableCarrier>(sign_semiring_table());
    LayeredCarrier second(sign_layers, grades4());
    CHECK(classify(second, second.window(0)).kind == TripleProfile::Kind::Second);
}

TEST_CASE("truncated naturals") {
    FiniteSystemTable t2 = truncate_naturals(2);
    CHECK(t2.add[1][1] == 2);
    CHECK(t2.add[2][1] == 2);
    CHECK(t2.add[2][2] == 2);
    FiniteSystemTable t1 = truncate_naturals(1);
    CHECK(t1.add[1][1] == 1);  // Boolean
    for (int m = 1; m <= 4; ++m) {
        FiniteSystemTable t = truncate_naturals(m);
        for (int a = 0; a <= m; ++a) CHECK(t.add[a][0] == a);
    }
}

TEST_CASE("layered-n(2) is supertropical-like") {
    auto layers = std::make_shared<TableCarrier>(truncate_naturals(2));
    auto lc = std::make_shared<LayeredCarrier>(layers, grades4());
    SupertropicalCarrier st;
    auto iso = find_isomorphism(*lc, lc->window(0), st, st.window(0));
    CHECK(iso.has_value());
}

TEST_CASE("direct sums") {
    auto l1 = std::make_shared<TableCarrier>(sign_semiring_table());
    auto l2 = std::make_shared<TableCarrier>(sign_semiring_table());
    SUBCASE("option 2 generates the sum") {
        DirectSumCarrier ds({l1, l2}, DirectSumOption::Disjoint);
        VerificationReport r = check_triple(ds, ds.window(0));
        CHECK(r.passed(law::kGeneration));
        CHECK(r.passed(law::kTangibleQuasi));
    }
    SUBCASE("option 1 fails generation") {
        DirectSumCarrier ds({l1, l2}, DirectSumOption::Diagonal);
        VerificationReport r = check_triple(ds, ds.window(0));
        CHECK_FALSE(r.passed(law::kGeneration));
    }
    SUBCASE("option 3 generates as well") {
        DirectSumCarrier ds({l1, l2}, DirectSumOption::Product);
        VerificationReport r = check_triple(ds, ds.window(0));
        CHECK(r.passed(law::kGeneration));
    }
    SUBCASE("empty index list is the zero module") {
        DirectSumCarrier ds({}, DirectSumOption::Disjoint);
        CHECK(ds.window(0).size() == 1);
    }
}

TEST_CASE("polynomial system") {
    auto base = std::make_shared<TableCarrier>(sign_semiring_table());
    PolyCarrier poly(base, 1, 4);
    Elem one = *base->one();
    SUBCASE("(1 + x)(1 (-) x) has a non-tangible coefficient at x") {
        Elem p = poly.add(poly.constant(one), poly.monomial({1}, one));
        Elem q = poly.add(poly.constant(one), poly.monomial({1}, base->neg(one)));
        Elem prod = *poly.mul(p, q);
        auto coeff = poly.coeff_at(prod, {1});
        REQUIRE(coeff.has_value());
        CHECK(*coeff == 3);  // 1 (-) 1 = inf
        CHECK_FALSE(base->tangible(*coeff));
        CHECK_FALSE(poly.tangible(prod));
    }
    SUBCASE("constants embed the base") {
        for (Elem v : base->window()) {
            if (v == base->zero()) continue;
            Elem cv = poly.constant(v);
            CHECK(poly.tangible(cv) == base->tangible(v));
            CHECK(*poly.mul(cv, poly.constant(*base->one())) == cv);
        }
    }
    SUBCASE("products of tangible monomials are tangible monomials") {
        for (Elem c1 : base->window())
            for (Elem c2 : base->window()) {
                if (!base->tangible(c1) || !base->tangible(c2)) continue;
                Elem m1 = poly.monomial({1}, c1);
                Elem m2 = poly.monomial({2}, c2);
                CHECK(poly.tangible(*poly.mul(m1, m2)));
            }
    }
    SUBCASE("degree overflow is an explicit error") {
        Elem big = poly.monomial({4}, one);
        CHECK_THROWS_AS(poly.mul(big, big), ResourceError);
    }
    SUBCASE("poly system is a triple with the coefficientwise order") {
        CHECK(check_triple(poly, poly.window(0)).all_pass());
        CHECK(check_surpassing_axioms(poly, poly.window(0)).all_pass());
    }
}

TEST_CASE("matrix system") {
    auto base = std::make_shared<SupertropicalCarrier>();
    SUBCASE("n = 1 is the base itself") {
        MatrixCarrier m1(base, 1);
        auto iso = find_isomorphism(m1, m1.window(0), *base, base->window(0));
        // windows differ in composition; check ops directly instead
        Elem a = m1.matrix({base->tangible_of(Rational(1))});
        Elem b = m1.matrix({base->tangible_of(Rational(2))});
        CHECK(m1.add(a, b) == b);
        CHECK(*m1.mul(a, b) == m1.matrix({base->tangible_of(Rational(3))}));
        (void)iso;
    }
    MatrixCarrier m2(base, 2);
    Elem a1 = base->tangible_of(Rational(1));
    Elem a2 = base->tangible_of(Rational(2));
    Elem one = *base->one();
    SUBCASE("(a1 e11 + e12)(e12 + a2 e22) = (a1 + a2) e12") {
        Elem lhs = m2.add(m2.unit_matrix(0, 0, a1), m2.unit_matrix(0, 1, one));
        Elem rhs = m2.add(m2.unit_matrix(0, 1, one), m2.unit_matrix(1, 1, a2));
        Elem prod = *m2.mul(lhs, rhs);
        CHECK(prod == m2.unit_matrix(0, 1, base->add(a1, a2)));
    }
    SUBCASE("the identity is a unit but not tangible") {
        CHECK_FALSE(m2.tangible(*m2.one()));
        Elem x = m2.add(m2.unit_matrix(0, 0, a1), m2.unit_matrix(1, 0, a2));
        CHECK(*m2.mul(x, *m2.one()) == x);
        CHECK(*m2.mul(*m2.one(), x) == x);
    }
    SUBCASE("not cancellative for n >= 2: a witness exists") {
        std::string w;
        CHECK_FALSE(is_cancellative(m2, m2.window(0), &w));
        CHECK_FALSE(w.empty());
    }
    SUBCASE("matrix tangibles have at most one nonzero entry") {
        CHECK(m2.tangible(m2.unit_matrix(0, 1, a1)));
        CHECK_FALSE(m2.tangible(m2.add(m2.unit_matrix(0, 0, a1), m2.unit_matrix(0, 1, a2))));
        CHECK_FALSE(m2.tangible(m2.unit_matrix(0, 0, base->ghost_of(Rational(1)))));
    }
    SUBCASE("matrix system is a triple") {
        VerificationReport r = check_triple(m2, m2.window(0));
        CHECK(r.passed(law::kNegInvolution));
        CHECK(r.passed(law::kNegAdditive));
        CHECK(r.passed(law::kGeneration));
        CHECK(r.passed(law::kTangibleQuasi));
    }
}
