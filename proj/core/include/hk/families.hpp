#pragma once

#include "hk/carrier.hpp"
#include "hk/rational.hpp"
#include "hk/table.hpp"

#include <tuple>

namespace hk {

/// Standard supertropical system over rational tangible values: elements are
/// 0, tangibles a, and ghosts a^v; addition is max with ties turning ghost,
/// negation is the identity, and the surpassing relation is ghost surpassing.
class SupertropicalCarrier : public InternedCarrier<std::tuple<int, Rational>> {
public:
    SupertropicalCarrier();

    std::string name() const override { return "supertropical"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override { return a; }
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool tangible(Elem a) override { return std::get<0>(enc(a)) == 1; }
    bool leq(Elem b1, Elem b2) override;
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    bool window_closed(int) const override { return true; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    std::optional<Elem> div_tangible(Elem a, Elem target) override;

    Elem tangible_of(const Rational& v) { return intern({1, v}); }
    Elem ghost_of(const Rational& v) { return intern({2, v}); }
    bool ghost(Elem a) const { return std::get<0>(enc(a)) == 2; }
    Rational value(Elem a) const { return std::get<1>(enc(a)); }

private:
    Elem zero_, one_;
};

/// Max-plus over the rationals with the identity negation and equality as the
/// surpassing relation.  Not a triple (every element is a quasi-zero); kept
/// as a negative fixture and as the base of the symmetrized system.
class MaxplusCarrier : public InternedCarrier<std::tuple<int, Rational>> {
public:
    MaxplusCarrier();
    std::string name() const override { return "maxplus"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override { return a; }
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool tangible(Elem a) override { return a != zero_; }
    bool leq(Elem b1, Elem b2) override { return b1 == b2; }
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    bool window_closed(int) const override { return true; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;
    std::vector<Elem> add_solutions(Elem a, Elem target) override {
        // max(a, x) = target: x = target when target dominates a, or any x
        // dominated by a when target == a (zero is always such an x)
        std::vector<Elem> out;
        if (add(a, target) == target) out.push_back(target);
        if (target == a) out.push_back(zero_);
        return out;
    }
    Elem of(const Rational& v) { return intern({1, v}); }

private:
    Elem zero_, one_;
};

/// (N, +, *) with the positive naturals tangible; base of the N-hat
/// symmetrization.
class NaturalsCarrier : public InternedCarrier<long long> {
public:
    NaturalsCarrier();
    std::string name() const override { return "naturals"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override { return intern(enc(a) + enc(b)); }
    Elem neg(Elem a) override { return a; }
    std::optional<Elem> mul(Elem a, Elem b) override { return intern(enc(a) * enc(b)); }
    bool tangible(Elem a) override { return enc(a) > 0; }
    bool leq(Elem b1, Elem b2) override { return b1 == b2; }
    std::vector<Elem> window(int variant = 0) override;
    std::string label(Elem a) const override { return std::to_string(enc(a)); }
    std::optional<Elem> parse_label(const std::string& s) override;
    std::vector<Elem> add_solutions(Elem a, Elem target) override {
        if (enc(target) < enc(a)) return {};
        return {of(enc(target) - enc(a))};
    }
    Elem of(long long v) { return intern(v); }

private:
    Elem zero_, one_;
};

/// The integers as a classical hyperfield window with T = {1,-1}: a semiring
/// system that is not a hypersystem (2 balances no tangible element).
class ZWindowCarrier : public InternedCarrier<long long> {
public:
    ZWindowCarrier();
    std::string name() const override { return "z-hyperfield"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override { return intern(enc(a) + enc(b)); }
    Elem neg(Elem a) override { return intern(-enc(a)); }
    std::optional<Elem> mul(Elem a, Elem b) override { return intern(enc(a) * enc(b)); }
    bool tangible(Elem a) override { return enc(a) == 1 || enc(a) == -1; }
    bool leq(Elem b1, Elem b2) override { return b1 == b2; }
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    std::string label(Elem a) const override { return std::to_string(enc(a)); }
    std::optional<Elem> parse_label(const std::string& s) override;
    Elem of(long long v) { return intern(v); }

private:
    Elem zero_, one_;
};

/// Hypersystem of the triangle hyperfield restricted to the positive
/// integers: elements are integer intervals [lo,hi] with lo = 0 or hi-lo
/// even; the surpassing relation is inclusion.  A_Null properly contains the
/// quasi-zeros here ([0,3] is null but no quasi-zero).
class TriangleZCarrier : public InternedCarrier<std::pair<long long, long long>> {
public:
    TriangleZCarrier();
    std::string name() const override { return "triangle"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override { return a; }
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool tangible(Elem a) override {
        auto [lo, hi] = enc(a);
        return lo == hi && lo >= 1;
    }
    bool leq(Elem b1, Elem b2) override {
        auto [l1, h1] = enc(b1);
        auto [l2, h2] = enc(b2);
        return l2 <= l1 && h1 <= h2;
    }
    bool null(Elem b) override { return enc(b).first == 0; }
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;
    Elem point(long long v) { return intern({v, v}); }
    Elem interval(long long lo, long long hi) { return intern({lo, hi}); }

private:
    Elem zero_, one_;
};

/// The rationals as a classical field carrier (exact arithmetic); used as the
/// source of matroid oracles and as the trivial-subgroup quotient base.
class QFieldCarrier : public InternedCarrier<Rational> {
public:
    QFieldCarrier();
    std::string name() const override { return "q-field"; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override { return intern(enc(a) + enc(b)); }
    Elem neg(Elem a) override { return intern(-enc(a)); }
    std::optional<Elem> mul(Elem a, Elem b) override { return intern(enc(a) * enc(b)); }
    bool tangible(Elem a) override { return !enc(a).is_zero(); }
    bool leq(Elem b1, Elem b2) override { return b1 == b2; }
    std::vector<Elem> window(int variant = 0) override;
    std::string label(Elem a) const override { return enc(a).str(); }
    std::optional<Elem> parse_label(const std::string& s) override;
    Elem of(const Rational& v) { return intern(v); }

private:
    Elem zero_, one_;
};

/// Finite table builders for the small catalog structures.
FiniteHyperTable krasner_table();
FiniteHyperTable signs_table();
FiniteHyperTable viro_multigroup_table();
FiniteHyperTable tropical_chain_table(int chain);  // tropical hyperfield window 0<1<...<chain
FiniteSystemTable boolean_semiring_table();
FiniteSystemTable sign_semiring_table();
FiniteSystemTable characteristic_triple_table();
FiniteSystemTable supertropical3_table();  // {0, 1, 1v}

} // namespace hk
