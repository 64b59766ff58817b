#include <doctest.h>

#include "hk/families.hpp"
#include "hk/layered_hyper.hpp"
#include "hk/phase.hpp"
#include "hk/systems.hpp"

#include <random>

using namespace hk;

namespace {

Rational rand_turn(std::mt19937_64& rng) {
    int den = 1 + static_cast<int>(rng() % 24);
    int num = static_cast<int>(rng() % (2 * den));
    return Rational(num, den);
}

} // namespace

TEST_CASE("pointwise phase sums") {
    Angle a(Rational(0)), b(Rational(1, 4)), anti(Rational(1, 2));
    SUBCASE("a + a = {a}") {
        CircleSet s = phase_point_sum(a, a, false);
        CHECK(s.points().size() == 1);
        CHECK(s.points()[0] == a);
    }
    SUBCASE("a + (-a) = {-a, 0, a}") {
        CircleSet s = phase_point_sum(a, anti, false);
        CHECK(s.has_zero());
        CHECK(s.points().size() == 2);
    }
    SUBCASE("a + b is the short open arc") {
        CircleSet s = phase_point_sum(a, b, false);
        REQUIRE(s.arcs().size() == 1);
        CHECK(s.arcs()[0].from == a);
        CHECK(s.arcs()[0].to == b);
        CHECK_FALSE(s.arcs()[0].closed_from);
        CHECK_FALSE(s.contains(a));
        CHECK(s.contains(Angle(Rational(1, 8))));
    }
    SUBCASE("weak phase gives closed arcs and full antipodal sums") {
        CircleSet s = phase_point_sum(a, b, true);
        REQUIRE(s.arcs().size() == 1);
        CHECK(s.contains(a));
        CHECK(s.contains(b));
        CircleSet f = phase_point_sum(a, anti, true);
        CHECK(f.is_full());
        CHECK(f.has_zero());
    }
}

TEST_CASE("paper shape identities on the phase carrier") {
    PhaseCarrier c(false);
    Elem p0 = c.point(Rational(0));
    Elem p14 = c.point(Rational(1, 4));
    Elem p12 = c.point(Rational(1, 2));
    Elem p34 = c.point(Rational(3, 4));
    SUBCASE("a + b + (-a) is the open half circle through b") {
        Elem s = c.add(c.add(p0, p14), p12);
        const CircleSet& cs = c.enc(s);
        REQUIRE(cs.arcs().size() == 1);
        CHECK(cs.arcs()[0].from == Angle(Rational(0)));
        CHECK(cs.arcs()[0].to == Angle(Rational(1, 2)));
        CHECK_FALSE(cs.has_zero());
        CHECK_FALSE(cs.contains(Angle(Rational(0))));
    }
    SUBCASE("a + b + (-a) + (-b) is the whole hyperfield") {
        Elem s = c.add(c.add(c.add(p0, p14), p12), p34);
        CHECK(c.enc(s).is_full());
        CHECK(c.null(s));
    }
    SUBCASE("arc absorbed by its own points") {
        Elem arc = c.add(p0, p14);
        CHECK(c.add(arc, c.point(Rational(1, 8))) == arc);
        CHECK(c.add(arc, p0) == arc);
    }
    SUBCASE("trip plus interior point spreads to the half circle") {
        Elem trip = c.add(p0, p12);
        CHECK(c.null(trip));
        Elem s = c.add(trip, p14);
        const CircleSet& cs = c.enc(s);
        REQUIRE(cs.arcs().size() == 1);
        CHECK(cs.arcs()[0].from.ccw_to(cs.arcs()[0].to) == Rational(1, 2));
        CHECK_FALSE(cs.has_zero());
    }
}

TEST_CASE("random point sums stay in the carrier and are associative") {
    for (bool weak : {false, true}) {
        PhaseCarrier c(weak);
        std::mt19937_64 rng(20260810);
        for (int trial = 0; trial < 300; ++trial) {
            std::vector<Elem> pts;
            int k = 2 + static_cast<int>(rng() % 4);
            for (int i = 0; i < k; ++i) pts.push_back(c.point(rand_turn(rng)));
            // fold in two different association orders and a shuffled order
            Elem left = pts[0];
            for (int i = 1; i < k; ++i) left = c.add(left, pts[i]);
            Elem right = pts[k - 1];
            for (int i = k - 2; i >= 0; --i) right = c.add(pts[i], right);
            CHECK(left == right);
            std::vector<Elem> shuffled = pts;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            Elem mixed = shuffled[0];
            for (int i = 1; i < k; ++i) mixed = c.add(mixed, shuffled[i]);
            CHECK(left == mixed);
            CHECK(c.valid_shape(c.enc(left)));
        }
    }
}

TEST_CASE("phase window is a strong system of the second kind") {
    for (bool weak : {false, true}) {
        PhaseCarrier c(weak);
        auto win = c.window(0);
        VerificationReport tr = check_triple(c, win);
        CHECK(tr.all_pass());
        VerificationReport su = check_surpassing_axioms(c, win);
        CHECK(su.all_pass());
        TripleProfile p = classify(c, win);
        CHECK(p.kind == TripleProfile::Kind::Second);
        CHECK(p.regular);
        CHECK(p.geometric);
    }
}

TEST_CASE("reversibility holds elementwise on the phase window") {
    PhaseCarrier c(false);
    std::vector<Rational> angles;
    for (int k = 0; k < 8; ++k) angles.push_back(Rational(k, 8));
    for (const auto& t1 : angles)
        for (const auto& t2 : angles)
            for (const auto& t3 : angles) {
                // a1 in a2 + a3 iff a3 in a1 + (-a2)
                Elem s23 = c.add(c.point(t2), c.point(t3));
                Elem s1n2 = c.add(c.point(t1), c.neg(c.point(t2)));
                bool lhs = c.enc(s23).contains(Angle(t1));
                bool rhs = c.enc(s1n2).contains(Angle(t3));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("setwise and distributed products disagree on the phase window") {
    PhaseCarrier c(false);
    ProductDiscrepancy d = phase_product_discrepancy(c);
    REQUIRE(d.found);
    CHECK_FALSE(d.setwise_in_carrier);
    MESSAGE("setwise ", d.setwise, " vs distributed ", d.distributed, " at (",
            d.left_operand, ", ", d.right_operand, ")");
}

TEST_CASE("distributed product makes the phase window a semiring system") {
    PhaseCarrier c(false, true);
    auto win = c.window(0);
    // distributivity of the distributed product over addition, spot checks
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Elem a = win[rng() % win.size()];
        Elem b = win[rng() % win.size()];
        Elem d = win[rng() % win.size()];
        Elem lhs = *c.mul(a, c.add(b, d));
        Elem rhs = c.add(*c.mul(a, b), *c.mul(a, d));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tangible action rotates shapes") {
    PhaseCarrier c(false);
    Elem i = c.point(Rational(1, 4));
    Elem arc = c.add(c.point(Rational(0)), i);
    Elem rotated = *c.mul(i, arc);
    const CircleSet& cs = c.enc(rotated);
    REQUIRE(cs.arcs().size() == 1);
    CHECK(cs.arcs()[0].from == Angle(Rational(1, 4)));
    CHECK(cs.arcs()[0].to == Angle(Rational(1, 2)));
}

TEST_CASE("phased tropical layers") {
    PhasedLayersCarrier c(false, {Rational(0), Rational(1)});
    Elem a = c.point(Rational(0), Rational(1));
    Elem b = c.point(Rational(1, 4), Rational(0));
    SUBCASE("higher grade absorbs") {
        CHECK(c.add(a, b) == a);
    }
    SUBCASE("equal grade, non-opposite layers give the arc at that grade") {
        Elem b2 = c.point(Rational(1, 4), Rational(1));
        Elem s = c.add(a, b2);
        CHECK_FALSE(c.null(s));
        CHECK(c.contains_point(s, Angle(Rational(1, 8)), Rational(1)));
        CHECK_FALSE(c.contains_point(s, Angle(Rational(1, 8)), Rational(0)));
    }
    SUBCASE("opposite layers spill to all lower grades") {
        Elem na = c.point(Rational(1, 2), Rational(1));
        Elem s = c.add(a, na);
        CHECK(c.null(s));
        CHECK(c.contains_point(s, Angle(Rational(0)), Rational(1)));
        CHECK(c.contains_point(s, Angle(Rational(1, 3)), Rational(1, 2)));  // below
        CHECK_FALSE(c.contains_point(s, Angle(Rational(1, 3)), Rational(1)));
        CHECK_FALSE(c.contains_point(s, Angle(Rational(1, 3)), Rational(2)));
    }
    SUBCASE("window is a strong second-kind system") {
        auto win = c.window(0);
        CHECK(check_triple(c, win).all_pass());
        CHECK(check_surpassing_axioms(c, win).all_pass());
        CHECK(classify(c, win).kind == TripleProfile::Kind::Second);
    }
    SUBCASE("reversibility on layered points") {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int k = 0; k < 4; ++k) {
            pts.push_back({Rational(k, 4), Rational(0)});
            pts.push_back({Rational(k, 4), Rational(1)});
        }
        for (auto& [u1, g1] : pts)
            for (auto& [u2, g2] : pts)
                for (auto& [u3, g3] : pts) {
                    Elem s23 = c.add(c.point(u2, g2), c.point(u3, g3));
                    Elem s1n2 = c.add(c.point(u1, g1), c.neg(c.point(u2, g2)));
                    bool lhs = c.contains_point(s23, Angle(u1), g1);
                    bool rhs = c.contains_point(s1n2, Angle(u3), g3);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("viro complex layers") {
    PhasedLayersCarrier c(true, {Rational(0), Rational(1)});
    Elem a = c.point(Rational(0), Rational(1));
    SUBCASE("opposite layers fill the closed down-set") {
        Elem na = c.point(Rational(1, 2), Rational(1));
        Elem s = c.add(a, na);
        CHECK(c.null(s));
        CHECK(c.contains_point(s, Angle(Rational(1, 3)), Rational(1)));  // closed at top
        CHECK(c.contains_point(s, Angle(Rational(1, 3)), Rational(0)));
    }
    SUBCASE("equal grade gives closed arcs") {
        Elem b = c.point(Rational(1, 4), Rational(1));
        Elem s = c.add(a, b);
        CHECK(c.contains_point(s, Angle(Rational(0)), Rational(1)));
        CHECK(c.contains_point(s, Angle(Rational(1, 4)), Rational(1)));
    }
    SUBCASE("window checks") {
        auto win = c.window(0);
        CHECK(check_triple(c, win).all_pass());
        CHECK(check_surpassing_axioms(c, win).all_pass());
    }
}

TEST_CASE("tropical layers over the Krasner hyperfield behave like supertropical") {
    LayeredHyperCarrier c(krasner_table(), {Rational(0), Rational(1), Rational(2)});
    Elem a = c.point(1, Rational(1));
    Elem s = c.add(a, a);
    CHECK(c.null(s));                                        // a + a is the down-set
    CHECK(c.contains_point(s, 1, Rational(1)));
    CHECK(c.contains_point(s, 1, Rational(1, 2)));
    Elem b = c.point(1, Rational(2));
    CHECK(c.add(s, b) == b);                                 // higher grade absorbs
    CHECK(c.add(a, c.point(1, Rational(0))) == a);
    auto win = c.window(0);
    CHECK(check_triple(c, win).all_pass());
    CHECK(check_surpassing_axioms(c, win).all_pass());
    TripleProfile p = classify(c, win);
    CHECK(p.kind == TripleProfile::Kind::First);
    CHECK(p.bipotent);
}

TEST_CASE("sign layers over rational grades form the signed tropical system") {
    LayeredHyperCarrier c(signs_table(), {Rational(0), Rational(1)});
    Elem pos = c.point(1, Rational(1));
    Elem neg = c.point(2, Rational(1));
    Elem s = c.add(pos, neg);
    CHECK(c.null(s));
    CHECK(c.contains_point(s, 1, Rational(1)));
    CHECK(c.contains_point(s, 2, Rational(1)));
    CHECK(c.contains_point(s, 1, Rational(0)));
    CHECK(check_triple(c, c.window(0)).all_pass());
    CHECK(classify(c, c.window(0)).kind == TripleProfile::Kind::Second);
}
