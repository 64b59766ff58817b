#pragma once

#include "hk/carrier.hpp"
#include "hk/rational.hpp"

#include <memory>

namespace hk {

/// Layered extension L x| G of the ordered rational grade monoid (Q,+,<=)
/// with a layer carrier L (no bottom grade; an absorbing zero is adjoined):
/// grade-lexicographic addition, componentwise tangible action, negation on
/// the layer, null exactly when the layer is null.
///
/// When L has a total product the extension is a semiring with componentwise
/// multiplication (grades add).
class LayeredCarrier : public InternedCarrier<std::pair<Elem, Rational>> {
public:
    /// Windows pair the layer carrier's windows with `grade_window`;
    /// operations stay total on all encoded elements.
    LayeredCarrier(std::shared_ptr<Carrier> layers, std::vector<Rational> grade_window,
                   std::string name = "");

    std::string name() const override { return name_; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return layers_->total_mul(); }
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override;
    bool null(Elem b) override;
    std::vector<Elem> window(int variant = 0) override;
    int window_count() const override { return 3; }
    bool window_closed(int v) const override {
        return layers_->finite() || layers_->window_closed(v);
    }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    Elem at(Elem layer, const Rational& grade) { return intern({layer, grade}); }
    Carrier& layers() { return *layers_; }

private:
    std::shared_ptr<Carrier> layers_;
    std::vector<Rational> grades_;
    std::string name_;
    Elem zero_, one_;
};

} // namespace hk
