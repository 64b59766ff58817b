#pragma once

#include "hk/carrier.hpp"

#include <memory>

namespace hk {

/// Symmetrized triple over a base semiring carrier: pairs (a0,a1) with
/// pointwise addition, the twist product, the switch negation and
/// circ-surpassing.  T is (T x 0) u (0 x T); the negation map is of the
/// second kind.
///
/// With `bipotent_variant` set (base T a bipotent subsemigroup), the carrier
/// is cut down to {(0,0)} u T^ u T^deg and addition follows the modified
/// case split, giving a (-)-bipotent shallow triple of the second kind.
class SymmetrizedCarrier : public InternedCarrier<std::pair<Elem, Elem>> {
public:
    SymmetrizedCarrier(std::shared_ptr<Carrier> base, bool bipotent_variant,
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
    int window_count() const override { return base_->window_count(); }
    bool window_closed(int v) const override { return base_->window_closed(v); }
    bool finite() const override { return base_->finite(); }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    Elem pair_of(Elem pos, Elem negc) { return intern_pair(pos, negc); }
    Carrier& base() { return *base_; }

private:
    Elem intern_pair(Elem pos, Elem negc);
    bool base_tangible(Elem base_elem) const;

    std::shared_ptr<Carrier> base_;
    bool bipotent_variant_;
    std::string name_;
    Elem zero_, one_;
};

} // namespace hk
