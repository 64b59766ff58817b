#include <doctest.h>

#include "hk/families.hpp"
#include "hk/hyperops.hpp"

using namespace hk;

TEST_CASE("krasner is a hyperfield") {
    VerificationReport r = check_hyperring(krasner_table());
    CHECK(r.passed(axiom::kAssoc));
    CHECK(r.passed(axiom::kNeutral));
    CHECK(r.passed(axiom::kUniqueNeg));
    CHECK(r.passed(axiom::kReversible));
    CHECK(r.passed(axiom::kMulMonoid));
    CHECK(r.passed(axiom::kAbsorbing));
    CHECK(r.passed(axiom::kSingleDist));
    CHECK(r.passed(axiom::kHyperfield));
    CHECK(check_double_distributivity(krasner_table()).pass);
}

TEST_CASE("sign hyperfield is a doubly distributive hyperfield") {
    VerificationReport r = check_hyperring(signs_table());
    CHECK(r.all_pass());
    CHECK(check_double_distributivity(signs_table()).pass);
}

TEST_CASE("one-element ring passes the hypergroup checks") {
    FiniteHyperTable t;
    t.name = "trivial";
    t.labels = {"0"};
    t.zero = t.one = 0;
    t.neg = {0};
    t.add = {{SubsetVal{0}}};
    t.mul = {{0}};
    CHECK(check_hypergroup(t).all_pass());
    CHECK(check_regular_hypergroup(t).pass);  // vacuously
}

TEST_CASE("viro multigroup fails reversibility only") {
    FiniteHyperTable t = viro_multigroup_table();
    VerificationReport r = check_hypergroup(t);
    CHECK(r.passed(axiom::kAssoc));
    CHECK(r.passed(axiom::kNeutral));
    CHECK(r.passed(axiom::kUniqueNeg));
    const AxiomResult* rev = r.find(axiom::kReversible);
    REQUIRE(rev);
    CHECK_FALSE(rev->pass);
    // first witness in id-lex order: 1 in 1+(-1) but 1 not in 1+1
    CHECK(rev->witness == std::vector<std::string>{"1", "1", "1"});
}

TEST_CASE("reversibility is equivalent to negation being additive") {
    SUBCASE("krasner: both hold (negation is the identity)") {
        VerificationReport r = check_reversibility_equivalence(krasner_table());
        CHECK(r.passed(axiom::kRevEquivRev));
        CHECK(r.passed(axiom::kRevEquivMorph));
        CHECK(r.passed(axiom::kRevEquivAgree));
    }
    SUBCASE("sign hyperfield: both hold") {
        VerificationReport r = check_reversibility_equivalence(signs_table());
        CHECK(r.passed(axiom::kRevEquivRev));
        CHECK(r.passed(axiom::kRevEquivMorph));
        CHECK(r.passed(axiom::kRevEquivAgree));
    }
    SUBCASE("viro multigroup: both fail together") {
        FiniteHyperTable t = viro_multigroup_table();
        VerificationReport r = check_reversibility_equivalence(t);
        CHECK_FALSE(r.passed(axiom::kRevEquivRev));
        CHECK_FALSE(r.passed(axiom::kRevEquivMorph));
        CHECK(r.passed(axiom::kRevEquivAgree));
        // the documented witness: -(1 + (-1)) = {0,2} vs (-1) + 1 = {0,1}
        SubsetVal lhs = t.neg_set(t.add_sets(SubsetVal{1}, SubsetVal{2}));
        SubsetVal rhs = t.add_sets(t.neg_set(SubsetVal{1}), t.neg_set(SubsetVal{2}));
        CHECK(lhs == SubsetVal({0, 2}));
        CHECK(rhs == SubsetVal({0, 1}));
    }
}

TEST_CASE("quotient F11 by {1,-1} gives the six classes") {
    FiniteHyperTable q = quotient_hyperring(ring_mod(11), {1, 10});
    REQUIRE(q.size() == 6);
    CHECK(q.labels == std::vector<std::string>{"0", "1", "2", "3", "4", "5"});
    // [1] + [1] = {[0], [2]}
    CHECK(q.add[1][1] == SubsetVal({0, 2}));
    // [2] + [3] = {[1], [5]}
    CHECK(q.add[2][3] == SubsetVal({1, 5}));
    CHECK(check_hyperring(q).all_pass());
}

TEST_CASE("quotient F3 by its units is the Krasner hyperfield") {
    FiniteHyperTable q = quotient_hyperring(ring_mod(3), {1, 2});
    REQUIRE(q.size() == 2);
    CHECK(q.add[1][1] == SubsetVal({0, 1}));
    CHECK(q.mul[1][1] == 1);
    CHECK(check_hyperring(q).all_pass());
}

TEST_CASE("quotient by the trivial subgroup recovers the ring") {
    FiniteHyperTable q = quotient_hyperring(ring_mod(5), {1});
    CHECK(q.size() == 5);
    CHECK(q.is_single_valued());
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(q.add[a][b] == SubsetVal::singleton((a + b) % 5));
}

TEST_CASE("quotient rejects a non-subgroup") {
    CHECK_THROWS_AS(quotient_hyperring(ring_mod(11), {1, 2}), std::domain_error);
    CHECK_THROWS_AS(quotient_hyperring(ring_mod(11), {2, 6}), std::domain_error);
}

TEST_CASE("double distributivity fails for F5 mod {1,-1}") {
    FiniteHyperTable q = quotient_hyperring(ring_mod(5), {1, 4});
    CHECK(check_hyperring(q).all_pass());
    AxiomResult dd = check_double_distributivity(q);
    CHECK_FALSE(dd.pass);
}

TEST_CASE("regularity of generated submonoids") {
    SUBCASE("sign hyperfield is regular") {
        CHECK(check_regular_hypergroup(signs_table()).pass);
    }
    SUBCASE("krasner is not regular: {1} holds both 1 and -1 but not 0") {
        AxiomResult r = check_regular_hypergroup(krasner_table());
        REQUIRE_FALSE(r.pass);
        CHECK(r.witness[0] == "{1}");
    }
}

TEST_CASE("zero-absorbing failure is witnessed") {
    FiniteHyperTable t = krasner_table();
    t.mul[0][1] = 1;
    CHECK_THROWS_AS(t.validate(), ValidationError);
    // check_hyperring reports it as well when validation is skipped
    VerificationReport r = check_hyperring(t);
    const AxiomResult* abs = r.find(axiom::kAbsorbing);
    REQUIRE(abs);
    CHECK_FALSE(abs->pass);
    CHECK(abs->witness == std::vector<std::string>{"0", "1"});
}

TEST_CASE("mixed product sets compare elementwise on F5 cosets") {
    // (1+1)(1+1) under the two readings of distributivity
    FiniteHyperTable q = quotient_hyperring(ring_mod(5), {1, 4});
    SubsetVal sum = q.add[1][1];
    SubsetVal setwise = q.mul_sets(sum, sum);
    SubsetVal spread = q.add_sets(q.add_sets(q.hyperadd(q.mul[1][1], q.mul[1][1]),
                                             SubsetVal::singleton(q.mul[1][1])),
                                  SubsetVal::singleton(q.mul[1][1]));
    CHECK(setwise != spread);
    CHECK(setwise.subset_of(spread));
}
