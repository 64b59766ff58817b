#pragma once

#include "hk/carrier.hpp"
#include "hk/circle.hpp"

namespace hk {

/// Hypersystem of the phase hyperfield (weak = false) or the weak phase
/// hyperfield (weak = true), with rational angles in turns.
///
/// Phase shapes: {0}, points, open arcs of less than a half turn,
/// antipode-pairs-with-zero, open half circles, and the whole hyperfield.
/// Weak phase shapes: {0}, points, closed arcs, and the whole hyperfield.
/// The surpassing relation is inclusion.
///
/// The setwise product of shapes can leave the carrier (the hyperfield is
/// not doubly distributive); mul is the tangible action unless `distributed`
/// is set, in which case the distributed product over tangible generators is
/// used.
class PhaseCarrier : public InternedCarrier<CircleSet> {
public:
    explicit PhaseCarrier(bool weak, bool distributed = false);

    std::string name() const override {
        return std::string(weak_ ? "weak-phase" : "phase") + (distributed_ ? "-distributed" : "");
    }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override { return intern(enc(a).antipodal()); }
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return distributed_; }
    bool tangible(Elem a) override {
        const CircleSet& s = enc(a);
        return !s.has_zero() && !s.is_full() && s.arcs().empty() && s.points().size() == 1;
    }
    bool leq(Elem b1, Elem b2) override { return enc(b1).subset_of(enc(b2)); }
    bool null(Elem b) override { return enc(b).has_zero(); }
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    std::string label(Elem a) const override { return enc(a).str(); }
    std::optional<Elem> parse_label(const std::string& s) override;

    bool weak() const { return weak_; }
    Elem point(const Rational& turns) { return intern(CircleSet::point(Angle(turns))); }
    Elem element(const CircleSet& s);

    /// Generator points whose hypersum reproduces the element.
    std::vector<Angle> generators(Elem a) const;
    /// Setwise product {s1*s2} of the underlying sets; the raw result, which
    /// may fail to be a carrier shape.
    CircleSet setwise_product(Elem a, Elem b) const;
    /// Distributed product: hypersum of pairwise products of generators.
    Elem distributed_product(Elem a, Elem b);
    bool valid_shape(const CircleSet& s) const;

private:
    bool weak_;
    bool distributed_;
    Elem zero_, one_;
};

/// First witness (if any) where the setwise shape product and the
/// distributed product of the phase window disagree, including setwise
/// products that leave the carrier entirely.
struct ProductDiscrepancy {
    bool found = false;
    std::string left_operand, right_operand;
    std::string setwise;     // raw set description
    std::string distributed; // carrier element label
    bool setwise_in_carrier = false;
};
ProductDiscrepancy phase_product_discrepancy(PhaseCarrier& c, int window_variant = 0);

} // namespace hk
