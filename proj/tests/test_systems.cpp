#include <doctest.h>

#include "hk/families.hpp"
#include "hk/symmetrize.hpp"
#include "hk/systems.hpp"
#include "hk/table_carrier.hpp"

using namespace hk;

TEST_CASE("quasi-zeros of the supertropical window are the ghosts and zero") {
    SupertropicalCarrier c;
    auto qz = quasi_zeros(c, c.window(0));
    for (Elem q : qz) CHECK((q == c.zero() || c.ghost(q)));
    CHECK(std::find(qz.begin(), qz.end(), c.ghost_of(Rational(2))) != qz.end());
    CHECK(std::find(qz.begin(), qz.end(), c.zero()) != qz.end());
}

TEST_CASE("symmetrized quasi-zeros are the diagonal pairs") {
    auto base = std::make_shared<NaturalsCarrier>();
    SymmetrizedCarrier c(base, false);
    for (Elem q : quasi_zeros(c, c.window(0))) {
        auto [p, n] = c.enc(q);
        CHECK(p == n);
    }
}

TEST_CASE("check_triple on the supertropical window passes") {
    SupertropicalCarrier c;
    CHECK(check_triple(c, c.window(0)).all_pass());
    CHECK(check_triple(c, c.window(1)).all_pass());
    CHECK(check_triple(c, c.window(2)).all_pass());
}

TEST_CASE("max-plus with the identity negation is not a triple") {
    MaxplusCarrier c;
    VerificationReport r = check_triple(c, c.window(0));
    CHECK_FALSE(r.passed(law::kTangibleQuasi));  // every element is a quasi-zero
}

TEST_CASE("the sign semiring table is a triple and a strong system") {
    TableCarrier c(sign_semiring_table());
    auto win = c.window();
    CHECK(check_triple(c, win).all_pass());
    VerificationReport r = check_surpassing_axioms(c, win);
    CHECK(r.all_pass());
}

TEST_CASE("ghost surpassing on the supertropical carrier") {
    SupertropicalCarrier c;
    Elem a = c.tangible_of(Rational(2));
    Elem av = c.ghost_of(Rational(2));
    CHECK(surpasses(c, a, av));
    CHECK_FALSE(surpasses(c, av, a));
    CHECK(surpasses(c, a, a));
    CHECK(surpasses(c, c.zero(), av));
    CHECK_FALSE(surpasses(c, c.ghost_of(Rational(3)), av));
    CHECK(surpasses(c, c.tangible_of(Rational(1)), av));
    VerificationReport r = check_surpassing_axioms(c, c.window(0));
    CHECK(r.all_pass());  // supertropical is strong
}

TEST_CASE("null sets") {
    SUBCASE("supertropical null set is the ghost ideal") {
        SupertropicalCarrier c;
        for (Elem b : null_set(c, c.window(0))) CHECK((b == c.zero() || c.ghost(b)));
    }
    SUBCASE("triangle nulls reach zero and exceed the quasi-zeros") {
        TriangleZCarrier c;
        auto win = c.window(1);
        auto nulls = null_set(c, win);
        Elem odd = c.interval(0, 3);  // 1+1+1
        CHECK(std::find(nulls.begin(), nulls.end(), odd) != nulls.end());
        auto qz = quasi_zeros(c, win);
        CHECK(std::find(qz.begin(), qz.end(), odd) == qz.end());
    }
}

TEST_CASE("balance relation") {
    SupertropicalCarrier c;
    BalanceContext ctx = BalanceContext::null_of(c);
    Elem a = c.tangible_of(Rational(1)), b = c.tangible_of(Rational(2));
    CHECK(balances(ctx, a, a));
    CHECK_FALSE(balances(ctx, a, b));  // a (-) b is the max, tangible
    CHECK(balances(ctx, c.ghost_of(Rational(3)), b));
    for (Elem x : c.window(0))
        for (Elem y : c.window(0)) {
            if (!c.tangible(x) || !c.tangible(y)) continue;
            CHECK(balances(ctx, x, y) == (x == y));
        }
}

TEST_CASE("height") {
    SupertropicalCarrier c;
    auto win = c.window(0);
    CHECK(height(c, win, c.zero()) == 0);
    CHECK(height(c, win, c.tangible_of(Rational(2))) == 1);
    CHECK(height(c, win, c.ghost_of(Rational(2))) == 2);
    for (Elem b : win) {
        auto h = height(c, win, b);
        REQUIRE(h.has_value());
        CHECK(*h <= 3);
    }
}

TEST_CASE("classify supertropical") {
    SupertropicalCarrier c;
    TripleProfile p = classify(c, c.window(0));
    CHECK(p.kind == TripleProfile::Kind::First);
    CHECK(p.bipotent);
    CHECK(p.strongly_bipotent);
    CHECK(p.metatangible);
    CHECK(p.shallow);
    CHECK(p.circ_idempotent);
    CHECK(p.uniquely_negated);
    CHECK(p.cancellative);
    REQUIRE(p.e.has_value());
    CHECK(c.ghost(*p.e));
    CHECK(*p.e_prime == *p.e);
    CHECK(p.height_bound.has_value());
    CHECK(*p.height_bound <= 3);
}

TEST_CASE("classify the bipotent symmetrized max-plus") {
    auto base = std::make_shared<MaxplusCarrier>();
    SymmetrizedCarrier c(base, true);
    TripleProfile p = classify(c, c.window(0));
    CHECK(p.kind == TripleProfile::Kind::Second);
    CHECK(p.bipotent);
    CHECK(p.shallow);
    CHECK(p.metatangible);
    CHECK(p.regular);  // metatangible second kind
}

TEST_CASE("classify the sign semiring: geometric and regular") {
    TableCarrier c(sign_semiring_table());
    TripleProfile p = classify(c, c.window());
    CHECK(p.kind == TripleProfile::Kind::Second);
    CHECK(p.geometric);
    CHECK_FALSE(p.strongly_geometric);
    CHECK(p.regular);
    CHECK(p.shallow);
}

TEST_CASE("uniform presentations") {
    SupertropicalCarrier c;
    auto win = c.window(0);
    SUBCASE("tangible is m=1") {
        auto u = uniform_presentation(c, win, c.tangible_of(Rational(2)));
        CHECK(u.m == 1);
        CHECK(u.tangible_part == c.tangible_of(Rational(2)));
    }
    SUBCASE("ghost is the circ form") {
        auto u = uniform_presentation(c, win, c.ghost_of(Rational(2)));
        CHECK(u.m == 2);
        CHECK(u.circ_form);
        CHECK(u.tangible_part == c.tangible_of(Rational(2)));
    }
    SUBCASE("zero is refused") {
        CHECK_THROWS_AS(uniform_presentation(c, win, c.zero()), std::domain_error);
    }
    SUBCASE("non-bipotent carriers are refused") {
        ZWindowCarrier z;
        CHECK_THROWS_AS(uniform_presentation(z, z.window(0), z.of(2)), std::domain_error);
    }
    SUBCASE("circ form is unique up to sign on the symmetrized window") {
        auto base = std::make_shared<MaxplusCarrier>();
        SymmetrizedCarrier s(base, true);
        auto swin = s.window(0);
        for (Elem b : swin) {
            if (b == s.zero() || s.tangible(b)) continue;
            auto u = uniform_presentation(s, swin, b);
            CHECK(u.m == 2);
            for (Elem t : swin) {
                if (!s.tangible(t) || s.quasi_zero(t) != b) continue;
                CHECK((t == u.tangible_part || t == s.neg(u.tangible_part)));
            }
        }
    }
}

TEST_CASE("the section 2.5 pre-order") {
    SupertropicalCarrier c;
    auto win = c.window(0);
    Elem a = c.tangible_of(Rational(2));
    CHECK(preorder_leq(c, win, a, a));
    CHECK(preorder_leq(c, win, a, c.ghost_of(Rational(2))));  // d = a
    CHECK(preorder_leq(c, win, a, c.tangible_of(Rational(3))));
    CHECK_FALSE(preorder_leq(c, win, c.tangible_of(Rational(3)), a));
    for (Elem x : win)
        for (Elem y : win)
            CHECK((preorder_leq(c, win, x, y) || preorder_leq(c, win, y, x)));
}

TEST_CASE("irreducible core") {
    SUBCASE("a geometric input is its own core") {
        TableCarrier c(sign_semiring_table());
        auto core = irreducible_core(c, c.window());
        CHECK(core.tangibles.size() == 2);
        TripleProfile p = classify(c, core.elements);
        CHECK(p.geometric);
    }
    SUBCASE("supertropical tangibles are all irreducible") {
        SupertropicalCarrier c;
        auto win = c.window(0);
        auto core = irreducible_core(c, win);
        std::size_t tang = 0;
        for (Elem x : win)
            if (c.tangible(x)) ++tang;
        CHECK(core.tangibles.size() == tang);
    }
    SUBCASE("a decomposable tangible drops out of the core") {
        NaturalsCarrier c;
        auto win = c.window(0);
        auto core = irreducible_core(c, win);
        CHECK(std::find(core.tangibles.begin(), core.tangibles.end(), c.of(1)) !=
              core.tangibles.end());
        CHECK(std::find(core.tangibles.begin(), core.tangibles.end(), c.of(2)) ==
              core.tangibles.end());
    }
}

TEST_CASE("fuzzy ring axioms") {
    SUBCASE("supertropical window with eps = one and the ghost ideal") {
        SupertropicalCarrier c;
        auto win = c.window(0);
        VerificationReport r = check_fuzzy_ring(
            c, win, *c.one(), [&](Elem x) { return c.null(x); },
            [&](Elem x) { return c.tangible(x); });
        CHECK(r.all_pass());
    }
    SUBCASE("K0 containing the unit is rejected") {
        SupertropicalCarrier c;
        auto win = c.window(0);
        std::vector<Elem> k0 = {c.zero(), *c.one()};
        CHECK_THROWS_AS(check_fuzzy_ring(c, win, *c.one(), k0), std::domain_error);
    }
    SUBCASE("crafted four-element table fails axiom 3 with a witness") {
        // {0,1,p,w}: 1+1 = 1+p = w, p+p = p, w absorbing; p*p = p
        FiniteSystemTable t;
        t.name = "fuzzy-cx";
        t.labels = {"0", "1", "p", "w"};
        t.zero = 0;
        t.one = 1;
        t.tangible = {false, true, false, false};
        t.neg = {0, 1, 2, 3};
        t.add.assign(4, std::vector<Elem>(4));
        t.mul.assign(4, std::vector<std::optional<Elem>>(4));
        auto setadd = [&](int a, int b, int v) { t.add[a][b] = t.add[b][a] = v; };
        for (int a = 0; a < 4; ++a) setadd(0, a, a);
        setadd(1, 1, 3);
        setadd(1, 2, 3);
        setadd(1, 3, 3);
        setadd(2, 2, 2);
        setadd(2, 3, 3);
        setadd(3, 3, 3);
        auto setmul = [&](int a, int b, int v) { t.mul[a][b] = t.mul[b][a] = v; };
        for (int a = 0; a < 4; ++a) setmul(0, a, 0);
        setmul(1, 1, 1);
        setmul(1, 2, 2);
        setmul(1, 3, 3);
        setmul(2, 2, 2);
        setmul(2, 3, 3);
        setmul(3, 3, 3);
        t.surpass = SurpassSpec::circ();
        TableCarrier c(t);
        VerificationReport r = check_fuzzy_ring(c, c.window(), 1, {0, 3});
        CHECK(r.passed("fuzzy-1-eps-squared"));
        CHECK(r.passed("fuzzy-2-eps-characterized"));
        const AxiomResult* a3 = r.find("fuzzy-3-product-compat");
        REQUIRE(a3);
        CHECK_FALSE(a3->pass);
        // (1,p,p,1): 1+p and p+1 in K0, but 1*p + p*1 = p+p = p outside
        CHECK(a3->witness == std::vector<std::string>{"1", "p", "p", "1"});
    }
}

TEST_CASE("preunit induced multiplication") {
    SUBCASE("a semiring with unit u returns its own product") {
        FiniteSystemTable t = sign_semiring_table();
        FiniteSystemTable out = preunit_induced_mul(t, *t.one);
        for (int a = 0; a < t.size(); ++a)
            for (int b = 0; b < t.size(); ++b) CHECK(out.mul[a][b] == t.mul[a][b]);
    }
    SUBCASE("action-only table is completed to the full product") {
        FiniteSystemTable t = sign_semiring_table();
        t.mul[3][3] = std::nullopt;  // forget inf * inf, keep the action
        FiniteSystemTable out = preunit_induced_mul(t, 1);
        CHECK(out.mul_total());
        CHECK(*out.mul[3][3] == 3);
    }
    SUBCASE("failed preunit axioms are refused") {
        FiniteSystemTable t = sign_semiring_table();
        CHECK_THROWS_AS(preunit_induced_mul(t, 3), std::domain_error);
    }
}

TEST_CASE("explicit relation tables must be transitive") {
    FiniteSystemTable t = sign_semiring_table();
    t.surpass = SurpassSpec::explicit_pairs({{1, 3}, {3, 2}});
    CHECK_THROWS_AS(TableCarrier{t}, ValidationError);
}
