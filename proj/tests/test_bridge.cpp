#include <doctest.h>

#include "hk/bridge.hpp"
#include "hk/families.hpp"
#include "hk/hyperops.hpp"
#include "hk/iso.hpp"
#include "hk/catalog.hpp"
#include "hk/table_carrier.hpp"

using namespace hk;

TEST_CASE("hypersystem of Krasner is the three-element supertropical table") {
    auto sys = hypersystem_of(krasner_table(), false);
    CHECK(sys->window().size() == 3);
    TableCarrier st(supertropical3_table());
    auto iso = find_isomorphism(*sys, sys->window(), st, st.window());
    REQUIRE(iso.has_value());
    CHECK((*iso)[sys->singleton_elem(0)] == 0);
    CHECK((*iso)[sys->singleton_elem(1)] == 1);
    CHECK((*iso)[sys->elem_for(SubsetVal({0, 1}))] == 2);
}

TEST_CASE("hypersystem of the signs is the sign semiring") {
    auto sys = hypersystem_of(signs_table(), false);
    CHECK(sys->window().size() == 4);
    TableCarrier l(sign_semiring_table());
    auto iso = find_isomorphism(*sys, sys->window(), l, l.window());
    REQUIRE(iso.has_value());
    CHECK((*iso)[sys->elem_for(SubsetVal({0, 1, 2}))] == 3);  // {0,1,-1} -> inf
    // setwise multiplication is lawful (the signs are doubly distributive)
    CHECK(sys->setwise_mul());
}

TEST_CASE("hypersystems are strong systems satisfying the system axioms") {
    for (auto t : {krasner_table(), signs_table()}) {
        auto sys = hypersystem_of(t, false);
        auto win = sys->window();
        CHECK(check_triple(*sys, win).all_pass());
        CHECK(check_surpassing_axioms(*sys, win).all_pass());
    }
}

TEST_CASE("hypersystem_of refuses the viro multigroup") {
    CHECK_THROWS_AS(hypersystem_of(viro_multigroup_table(), false), std::domain_error);
}

TEST_CASE("elimination profile of hypersystems: both axioms pass") {
    for (auto t : {krasner_table(), signs_table()}) {
        auto sys = hypersystem_of(t, false);
        BalanceContext ctx = BalanceContext::null_of(*sys);
        EliminationProfile p = elimination_profile(*sys, sys->window(), ctx);
        CHECK(p.tangibly_balanced);
        CHECK(p.balance_elimination);
        CHECK(p.nabla_inversion());  // tangibles form a group
        CHECK(p.faithfully_balanced);
    }
}

TEST_CASE("shallow unique-negation carriers pass the first two axioms") {
    SupertropicalCarrier c;
    BalanceContext ctx = BalanceContext::null_of(c);
    EliminationProfile p = elimination_profile(c, c.window(0), ctx);
    CHECK(p.tangibly_balanced);
    CHECK(p.balance_elimination);
    CHECK(p.nabla_inversion());
}

TEST_CASE("the integers with T = {1,-1} are not tangibly balanced") {
    ZWindowCarrier c;
    BalanceContext ctx = BalanceContext::null_of(c);
    EliminationProfile p = elimination_profile(c, c.window(0), ctx);
    CHECK_FALSE(p.tangibly_balanced);
    // 2 balances itself but no tangible balances it
    CHECK(balances(ctx, c.of(2), c.of(2)));
    for (Elem a : {c.of(0), c.of(1), c.of(-1)}) CHECK_FALSE(balances(ctx, a, c.of(2)));
}

TEST_CASE("F11 mod signs with the size-4 ideal: the documented counterexample") {
    FiniteHyperTable q = quotient_hyperring(ring_mod(11), {1, 10});
    auto sys = hypersystem_of(q, false);
    auto win = sys->window();
    BalanceContext ctx = BalanceContext::ideal(
        *sys,
        [&sys](Elem b) { return sys->null(b) || sys->set_of(b).size() >= 4; },
        "null+size>=4");
    EliminationProfile p = elimination_profile(*sys, win, ctx);
    CHECK_FALSE(p.tangibly_balanced);
    CHECK(p.balance_elimination);
    REQUIRE(p.witnesses.count("tangibly-balanced"));
    CHECK(p.witnesses["tangibly-balanced"] ==
          std::vector<std::string>{"{0|2}", "{1|5}"});
    // the failing pair really is balanced: {0,2} + {1,5} = {1,3,4,5}
    Elem b1 = sys->elem_for(SubsetVal({0, 2}));
    Elem b2 = sys->elem_for(SubsetVal({1, 5}));
    CHECK(sys->set_of(sys->add(b1, b2)) == SubsetVal({1, 3, 4, 5}));
    CHECK(balances(ctx, b1, b2));
}

TEST_CASE("boxplus-nabla") {
    SUBCASE("zero operand is neutral") {
        auto sys = hypersystem_of(signs_table(), false);
        BalanceContext ctx = BalanceContext::null_of(*sys);
        for (Elem a : sys->window()) {
            if (!sys->tangible(a)) continue;
            auto s = boxplus_nabla(*sys, sys->window(), ctx, {a, sys->zero()});
            CHECK(s == std::vector<Elem>{a});
        }
    }
    SUBCASE("sign system: 1 boxplus (-1) = {0, 1, -1}") {
        TableCarrier l(sign_semiring_table());
        BalanceContext ctx = BalanceContext::null_of(l);
        auto s = boxplus_nabla(l, l.window(), ctx, {1, 2});
        CHECK(s == std::vector<Elem>{0, 1, 2});
    }
    SUBCASE("supertropical: a boxplus a is the tropical down-set") {
        SupertropicalCarrier c;
        BalanceContext ctx = BalanceContext::null_of(c);
        Elem a2 = c.tangible_of(Rational(2));
        auto s = boxplus_nabla(c, c.window(0), ctx, {a2, a2});
        // everything of value <= 2 plus zero
        std::vector<Elem> expect{c.zero(), c.tangible_of(Rational(0)),
                                 c.tangible_of(Rational(1)), a2};
        std::sort(expect.begin(), expect.end());
        std::vector<Elem> got = s;
        std::sort(got.begin(), got.end());
        CHECK(got == expect);
    }
}

TEST_CASE("boxplus over the surpassing relation") {
    SUBCASE("on hypersystems boxplus-preceq coincides with the original hyperaddition") {
        auto sys = hypersystem_of(signs_table(), false);
        auto win = sys->window();
        for (Elem a : win)
            for (Elem b : win) {
                if (!sys->tangible(a) || !sys->tangible(b)) continue;
                auto via_order = boxplus_order(*sys, win, {a, b});
                SubsetVal expect =
                    sys->base().hyperadd(sys->set_of(a).front(), sys->set_of(b).front());
                std::vector<Elem> tangible_expect;
                for (Elem x : expect)
                    if (x != sys->base().zero)
                        tangible_expect.push_back(sys->singleton_elem(x));
                std::sort(tangible_expect.begin(), tangible_expect.end());
                std::sort(via_order.begin(), via_order.end());
                CHECK(via_order == tangible_expect);
            }
    }
    SUBCASE("supertropical: a boxplus-preceq a is the tangible down-set") {
        SupertropicalCarrier c;
        auto win = c.window(0);
        Elem a = c.tangible_of(Rational(2));
        auto s = boxplus_order(c, win, {a, a});
        for (Elem x : s) {
            CHECK(c.tangible(x));
            CHECK(c.value(x) <= Rational(2));
        }
        CHECK(s.size() == 3);
    }
}

TEST_CASE("nabla against boxplus agreement: a nabla S iff {a} included in S") {
    auto sys = hypersystem_of(signs_table(), false);
    auto win = sys->window();
    BalanceContext ctx = BalanceContext::null_of(*sys);
    for (Elem a : win) {
        if (!sys->tangible(a)) continue;
        for (Elem s : win) CHECK(balances(ctx, a, s) == sys->leq(a, s));
    }
}

TEST_CASE("recover returns the Krasner table exactly") {
    auto sys = hypersystem_of(krasner_table(), false);
    BalanceContext ctx = BalanceContext::null_of(*sys);
    FiniteHyperTable back = recover_hyperring(*sys, sys->window(), ctx);
    FiniteHyperTable orig = krasner_table();
    REQUIRE(back.size() == 2);
    // singleton identification: labels come back braced
    CHECK(back.labels == std::vector<std::string>{"{0}", "{1}"});
    CHECK(back.add[1][1] == SubsetVal({0, 1}));
    CHECK(back.mul[1][1] == 1);
    CHECK(check_hypergroup(back).all_pass());
}

TEST_CASE("recover returns the sign hyperfield from the sign semiring") {
    TableCarrier l(sign_semiring_table());
    BalanceContext ctx = BalanceContext::null_of(l);
    FiniteHyperTable back = recover_hyperring(l, l.window(), ctx);
    REQUIRE(back.size() == 3);
    FiniteHyperTable s = signs_table();
    // same labels 0,1,-1 and the same table
    for (int i = 0; i < 3; ++i) {
        auto j = s.find_label(back.labels[i]);
        REQUIRE(j.has_value());
    }
    CHECK(back.add[1][2] == SubsetVal({0, 1, 2}));
    CHECK(check_hyperring(back).all_pass());
}

TEST_CASE("recover refuses the integers fixture and carries the profile") {
    ZWindowCarrier c;
    BalanceContext ctx = BalanceContext::null_of(c);
    try {
        recover_hyperring(c, c.window(0), ctx);
        FAIL("expected RecoverRefused");
    } catch (const RecoverRefused& e) {
        CHECK_FALSE(e.profile.tangibly_balanced);
    }
}

TEST_CASE("recovered supertropical window addition is the tropical hyperfield") {
    SupertropicalCarrier c;
    auto win = c.window(0);  // values 0..3
    BalanceContext ctx = BalanceContext::null_of(c);
    RecoveredAddition ra = recover_hyperaddition(c, win, ctx);
    FiniteHyperTable chain = tropical_chain_table(4);
    REQUIRE(static_cast<int>(ra.t0.size()) == chain.size());
    // T0 comes out as zero then tangibles in window order 0,1,2,3
    for (int i = 0; i < chain.size(); ++i)
        for (int j = 0; j < chain.size(); ++j) {
            SubsetVal got(std::vector<Elem>(ra.add[i][j].begin(), ra.add[i][j].end()));
            CHECK(got == chain.add[i][j]);
        }
    // multiplication matches where it stays inside the window values
    for (int i = 1; i < chain.size(); ++i)
        for (int j = 1; j < chain.size(); ++j) {
            Rational v = c.value(ra.t0[i]) + c.value(ra.t0[j]);
            if (v <= Rational(3))
                CHECK(*c.mul(ra.t0[i], ra.t0[j]) == c.tangible_of(v));
        }
}

TEST_CASE("closed and closed2: associativity inclusions of boxplus-nabla") {
    auto sys = hypersystem_of(signs_table(), false);
    auto win = sys->window();
    BalanceContext ctx = BalanceContext::null_of(*sys);
    auto boxpn = [&](std::vector<Elem> ops) { return boxplus_nabla(*sys, win, ctx, ops); };
    for (Elem b1 : win)
        for (Elem b2 : win)
            for (Elem b3 : win) {
                if (!sys->tangible(b1) || !sys->tangible(b2) || !sys->tangible(b3))
                    continue;
                auto flat = boxpn({b1, b2, b3});
                // (b1 [+] b2) [+] b3
                std::vector<Elem> nested;
                for (Elem c12 : boxpn({b1, b2}))
                    for (Elem x : boxpn({c12, b3}))
                        if (std::find(nested.begin(), nested.end(), x) == nested.end())
                            nested.push_back(x);
                std::sort(nested.begin(), nested.end());
                std::sort(flat.begin(), flat.end());
                CHECK(nested == flat);  // both inclusions under the profile
            }
}

TEST_CASE("unique negation note: a tangible summand forces its negative") {
    auto sys = hypersystem_of(signs_table(), false);
    auto win = sys->window();
    for (Elem b1 : win) {
        if (!sys->tangible(b1)) continue;
        for (Elem b2 : win) {
            if (!sys->tangible(b2)) continue;
            if (sys->null(sys->add(b1, b2))) CHECK(b2 == sys->neg(b1));
        }
    }
}

TEST_CASE("assumption checks and the rebuilt hypergroup") {
    SUBCASE("krasner and signs rebuild their own hyperaddition") {
        for (auto t : {krasner_table(), signs_table()}) {
            auto sys = hypersystem_of(t, false);
            BalanceContext ctx = BalanceContext::null_of(*sys);
            VerificationReport r = check_assumption_hyper1(*sys, sys->window(), ctx);
            CHECK(r.all_pass());  // conditions and the rebuilt hypergroup axioms
        }
    }
    SUBCASE("layered naturals fixtures fail the tangible-minorant condition") {
        for (bool variant_b : {false, true}) {
            auto entry = catalog_find(variant_b ? "layered-nat-order-b"
                                                : "layered-nat-order-a");
            REQUIRE(entry.has_value());
            auto c = entry->carrier();
            BalanceContext ctx = BalanceContext::null_of(*c);
            VerificationReport r = check_assumption_hyper1(*c, c->window(0), ctx);
            const AxiomResult* a = r.find("hyper1-1-tangible-minorant");
            REQUIRE(a);
            CHECK_FALSE(a->pass);
        }
    }
}

TEST_CASE("retraction suite on the small catalog") {
    for (auto t : {krasner_table(), signs_table()}) {
        VerificationReport r = retraction_suite(t);
        CHECK(r.passed("retraction-equality"));
        CHECK(r.passed("faithfully-balanced"));
    }
}

TEST_CASE("retraction across small quotients") {
    for (int p : {2, 3, 5, 7}) {
        for (int d = 1; d < p; ++d) {
            if ((p - 1) % d != 0) continue;
            FiniteHyperTable q = quotient_hyperring(ring_mod(p), fp_subgroup(p, d));
            CHECK(check_hyperring(q).passed(axiom::kReversible));
            VerificationReport r = retraction_suite(q);
            CHECK(r.passed("retraction-equality"));
        }
    }
}

TEST_CASE("nabla inversion holds when T is a group") {
    for (auto t : {krasner_table(), signs_table()}) {
        auto sys = hypersystem_of(t, false);
        BalanceContext ctx = BalanceContext::null_of(*sys);
        EliminationProfile p = elimination_profile(*sys, sys->window(), ctx);
        CHECK(p.nabla_inversion_left);
        CHECK(p.nabla_inversion_right);
    }
}

TEST_CASE("hypersystems of regular hyperfields are minus-regular") {
    auto sys = hypersystem_of(signs_table(), false);
    TripleProfile p = classify(*sys, sys->window());
    CHECK(p.regular);
}
