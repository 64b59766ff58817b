#include "hk/layered.hpp"

namespace hk {
namespace {
constexpr Elem kAdjoinedZero = -1;
}

LayeredCarrier::LayeredCarrier(std::shared_ptr<Carrier> layers,
                               std::vector<Rational> grade_window, std::string name)
    : layers_(std::move(layers)), grades_(std::move(grade_window)) {
    name_ = name.empty() ? "layered(" + layers_->name() + ")" : std::move(name);
    if (grades_.empty()) throw std::domain_error("layered: empty grade window");
    zero_ = intern({kAdjoinedZero, Rational(0)});
    auto lone = layers_->one();
    if (lone) one_ = intern({*lone, Rational(0)});
}

Elem LayeredCarrier::add(Elem a, Elem b) {
    if (a == zero_) return b;
    if (b == zero_) return a;
    auto [l1, g1] = enc(a);
    auto [l2, g2] = enc(b);
    if (g1 > g2) return a;
    if (g2 > g1) return b;
    return intern({layers_->add(l1, l2), g1});
}

Elem LayeredCarrier::neg(Elem a) {
    if (a == zero_) return a;
    auto [l, g] = enc(a);
    return intern({layers_->neg(l), g});
}

std::optional<Elem> LayeredCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    auto [l1, g1] = enc(a);
    auto [l2, g2] = enc(b);
    auto p = layers_->mul(l1, l2);
    if (!p) return std::nullopt;
    return intern({*p, g1 + g2});
}

bool LayeredCarrier::tangible(Elem a) {
    if (a == zero_) return false;
    return layers_->tangible(enc(a).first);
}

bool LayeredCarrier::null(Elem b) {
    if (b == zero_) return true;
    return layers_->null(enc(b).first);
}

bool LayeredCarrier::leq(Elem b1, Elem b2) {
    if (b1 == b2) return true;
    if (b2 == zero_) return false;
    auto [l2, g2] = enc(b2);
    if (b1 == zero_) return layers_->null(l2);
    auto [l1, g1] = enc(b1);
    if (g1 < g2) return layers_->null(l2);
    if (g1 == g2) return layers_->leq(l1, l2);
    return false;
}

std::vector<Elem> LayeredCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    const Elem lz = layers_->zero();
    for (const auto& g : grades_)
        for (Elem l : layers_->window(variant >= layers_->window_count()
                                          ? layers_->window_count() - 1
                                          : variant)) {
            if (l == lz) continue;
            out.push_back(intern({l, g}));
        }
    return out;
}

std::string LayeredCarrier::label(Elem a) const {
    if (a == zero_) return "O";
    auto [l, g] = enc(a);
    return layers_->label(l) + "@" + g.str();
}

std::optional<Elem> LayeredCarrier::parse_label(const std::string& s) {
    if (s == "O") return zero_;
    auto at_pos = s.rfind('@');
    if (at_pos == std::string::npos) return std::nullopt;
    auto l = layers_->parse_label(s.substr(0, at_pos));
    if (!l || *l == layers_->zero()) return std::nullopt;
    try {
        return intern({*l, Rational::parse(s.substr(at_pos + 1))});
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace hk
