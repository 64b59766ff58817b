#pragma once

#include "hk/carrier.hpp"
#include "hk/circle.hpp"
#include "hk/rational.hpp"
#include "hk/table.hpp"

#include <memory>

namespace hk {

/// Hyperfield-system layered extension over rational grades: elements are
/// X x {grade} plus an optional spill H' x {g < grade} u {0}, where X is a
/// nonempty zero-free subset of the layer hyperfield and equal-grade
/// opposite-layer sums spill to all lower grades.  Surpassing is inclusion.
///
/// Instantiated with a finite hyperfield table of layers (Krasner layers
/// give the tropical hyperfield system and so on).
class LayeredHyperCarrier
    : public InternedCarrier<std::tuple<SubsetVal, Rational, bool>> {
public:
    LayeredHyperCarrier(FiniteHyperTable layers, std::vector<Rational> grade_window,
                        std::string name = "");

    std::string name() const override { return name_; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    bool window_closed(int) const override { return true; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    Elem at(const SubsetVal& part, const Rational& grade, bool spill) {
        return intern({part, grade, spill});
    }
    Elem point(Elem layer, const Rational& grade) {
        return at(SubsetVal::singleton(layer), grade, false);
    }
    const FiniteHyperTable& layer_table() const { return layers_; }
    /// Membership of a hyperfield point (layer, grade) in the set denoted by
    /// the element.
    bool contains_point(Elem a, Elem layer, const Rational& grade);

private:
    FiniteHyperTable layers_;
    std::vector<Rational> grades_;
    std::string name_;
    Elem zero_, one_;
};

/// Phase or weak-phase layers over rational grades: the hyperfield systems of
/// the phased tropical hyperfield and of Viro's complex hyperfield.  The
/// layer part is a zero-free circle set; spill works as above.
class PhasedLayersCarrier
    : public InternedCarrier<std::tuple<CircleSet, Rational, bool>> {
public:
    PhasedLayersCarrier(bool weak, std::vector<Rational> grade_window);

    std::string name() const override {
        return weak_ ? "viro-complex" : "phased-tropical";
    }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return false; }
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    bool window_closed(int) const override { return true; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string&) override { return std::nullopt; }

    Elem point(const Rational& turns, const Rational& grade) {
        return intern({CircleSet::point(Angle(turns)), grade, false});
    }
    bool contains_point(Elem a, const Angle& u, const Rational& grade);

private:
    bool valid_part(const CircleSet& part) const;

    bool weak_;
    std::vector<Rational> grades_;
    Elem zero_, one_;
};

} // namespace hk
