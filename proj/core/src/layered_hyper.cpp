#include "hk/layered_hyper.hpp"

namespace hk {
namespace {
// the adjoined zero is encoded with an empty part and spill=false
const Rational kZeroGrade(0);
}

LayeredHyperCarrier::LayeredHyperCarrier(FiniteHyperTable layers,
                                         std::vector<Rational> grade_window,
                                         std::string name)
    : layers_(std::move(layers)), grades_(std::move(grade_window)) {
    layers_.validate();
    name_ = name.empty() ? "layered-hyper(" + layers_.name + ")" : std::move(name);
    zero_ = intern({SubsetVal{}, kZeroGrade, false});
    one_ = intern({SubsetVal::singleton(layers_.one), Rational(0), false});
}

Elem LayeredHyperCarrier::add(Elem a, Elem b) {
    if (a == zero_) return b;
    if (b == zero_) return a;
    const auto& [x1, g1, s1] = enc(a);
    const auto& [x2, g2, s2] = enc(b);
    if (g1 > g2) return a;
    if (g2 > g1) return b;
    SubsetVal w = layers_.add_sets(x1, x2);
    bool hit_zero = w.contains(layers_.zero);
    std::vector<Elem> top;
    for (Elem l : w)
        if (l != layers_.zero) top.push_back(l);
    SubsetVal part(std::move(top));
    if (s1) part = part.union_with(x2);
    if (s2) part = part.union_with(x1);
    return intern({part, g1, (s1 && s2) || hit_zero});
}

Elem LayeredHyperCarrier::neg(Elem a) {
    if (a == zero_) return a;
    const auto& [x, g, s] = enc(a);
    return intern({layers_.neg_set(x), g, s});
}

std::optional<Elem> LayeredHyperCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    const auto& [x1, g1, s1] = enc(a);
    const auto& [x2, g2, s2] = enc(b);
    // setwise product: zero-free parts of a hyperfield multiply to zero-free
    // parts, spill times anything lands in the spill of the product grade
    return intern({layers_.mul_sets(x1, x2), g1 + g2, s1 || s2});
}

bool LayeredHyperCarrier::tangible(Elem a) {
    if (a == zero_) return false;
    const auto& [x, g, s] = enc(a);
    return !s && x.is_singleton();
}

bool LayeredHyperCarrier::null(Elem b) {
    if (b == zero_) return true;
    return std::get<2>(enc(b));
}

bool LayeredHyperCarrier::leq(Elem b1, Elem b2) {
    if (b1 == b2) return true;
    if (b2 == zero_) return false;
    const auto& [x2, g2, s2] = enc(b2);
    if (b1 == zero_) return s2;
    const auto& [x1, g1, s1] = enc(b1);
    if (g1 == g2) return x1.subset_of(x2) && (!s1 || s2);
    if (g1 < g2) return s2;
    return false;
}

bool LayeredHyperCarrier::contains_point(Elem a, Elem layer, const Rational& grade) {
    if (a == zero_) return false;
    const auto& [x, g, s] = enc(a);
    if (grade == g) return x.contains(layer);
    return s && grade < g && layer != layers_.zero;
}

std::vector<Elem> LayeredHyperCarrier::window(int variant) {
    // the sub-monoid generated by the hyperfield points over the grade
    // window; the sum never leaves the grade set, so this closure is finite
    std::vector<Rational> grades = grades_;
    if (variant == 1 && grades.size() > 2) grades.resize(2);
    if (variant == 2) grades.push_back(grades.back() + Rational(1));
    std::vector<Elem> out{zero_};
    for (const auto& g : grades)
        for (Elem l = 0; l < layers_.size(); ++l)
            if (l != layers_.zero) out.push_back(point(l, g));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Elem s = add(out[i], out[j]);
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    return out;
}

std::string LayeredHyperCarrier::label(Elem a) const {
    if (a == zero_) return "O";
    const auto& [x, g, s] = enc(a);
    return subset_label(layers_, x) + "@" + g.str() + (s ? "!" : "");
}

std::optional<Elem> LayeredHyperCarrier::parse_label(const std::string& s) {
    if (s == "O") return zero_;
    auto at_pos = s.rfind('@');
    if (at_pos == std::string::npos || s.front() != '{') return std::nullopt;
    std::string part = s.substr(1, s.find('}') - 1);
    std::vector<Elem> members;
    std::size_t pos = 0;
    while (pos < part.size()) {
        auto bar = part.find('|', pos);
        std::string lab =
            part.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        auto l = layers_.find_label(lab);
        if (!l) return std::nullopt;
        members.push_back(*l);
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    std::string tail = s.substr(at_pos + 1);
    bool spill = !tail.empty() && tail.back() == '!';
    if (spill) tail.pop_back();
    try {
        return intern({SubsetVal(std::move(members)), Rational::parse(tail), spill});
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

PhasedLayersCarrier::PhasedLayersCarrier(bool weak, std::vector<Rational> grade_window)
    : weak_(weak), grades_(std::move(grade_window)) {
    zero_ = intern({CircleSet::empty(), kZeroGrade, false});
    one_ = intern({CircleSet::point(Angle(Rational(0))), Rational(0), false});
}

bool PhasedLayersCarrier::valid_part(const CircleSet& part) const {
    if (part.has_zero()) return false;
    if (part.is_full()) return true;
    if (part.points().size() == 1 && part.arcs().empty()) return true;
    if (part.points().size() == 2 && part.arcs().empty())
        return !weak_ && part.points()[0].antipode() == part.points()[1];
    if (part.points().empty() && part.arcs().size() == 1) {
        const auto& a = part.arcs()[0];
        Rational len = a.from.ccw_to(a.to);
        if (weak_) return a.closed_from && a.closed_to && len < Rational(1, 2);
        return !a.closed_from && !a.closed_to && len <= Rational(1, 2);
    }
    return false;
}

Elem PhasedLayersCarrier::add(Elem a, Elem b) {
    if (a == zero_) return b;
    if (b == zero_) return a;
    const auto& [x1, g1, s1] = enc(a);
    const auto& [x2, g2, s2] = enc(b);
    if (g1 > g2) return a;
    if (g2 > g1) return b;
    CircleSet w = x1.hypersum(x2, weak_);
    bool hit_zero = w.has_zero();
    w.set_zero(false);
    if (s1) w = w.unioned(x2);
    if (s2) w = w.unioned(x1);
    bool spill = (s1 && s2) || hit_zero;
    if (!valid_part(w))
        throw std::logic_error("phased layers: part " + w.str() + " left the shape family");
    return intern({w, g1, spill});
}

Elem PhasedLayersCarrier::neg(Elem a) {
    if (a == zero_) return a;
    const auto& [x, g, s] = enc(a);
    return intern({x.antipodal(), g, s});
}

std::optional<Elem> PhasedLayersCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    const auto& [x1, g1, s1] = enc(a);
    const auto& [x2, g2, s2] = enc(b);
    if (tangible(a))
        return intern({x2.rotated(x1.points()[0]), g1 + g2, s2});
    if (tangible(b))
        return intern({x1.rotated(x2.points()[0]), g1 + g2, s1});
    return std::nullopt;
}

bool PhasedLayersCarrier::tangible(Elem a) {
    if (a == zero_) return false;
    const auto& [x, g, s] = enc(a);
    return !s && !x.is_full() && x.arcs().empty() && x.points().size() == 1;
}

bool PhasedLayersCarrier::null(Elem b) {
    if (b == zero_) return true;
    return std::get<2>(enc(b));
}

bool PhasedLayersCarrier::leq(Elem b1, Elem b2) {
    if (b1 == b2) return true;
    if (b2 == zero_) return false;
    const auto& [x2, g2, s2] = enc(b2);
    if (b1 == zero_) return s2;
    const auto& [x1, g1, s1] = enc(b1);
    if (g1 == g2) return x1.subset_of(x2) && (!s1 || s2);
    if (g1 < g2) return s2;
    return false;
}

bool PhasedLayersCarrier::contains_point(Elem a, const Angle& u, const Rational& grade) {
    if (a == zero_) return false;
    const auto& [x, g, s] = enc(a);
    if (grade == g) return x.contains(u);
    return s && grade < g;
}

std::vector<Elem> PhasedLayersCarrier::window(int variant) {
    // the sub-monoid generated by points at a few angles over the grade
    // window (closed: sums stay on the same grades and angle set)
    std::vector<Rational> grades = grades_;
    if (variant == 2) grades.push_back(grades.back() + Rational(1));
    int denom = variant == 1 ? 6 : 4;
    std::vector<Elem> out{zero_};
    for (const auto& g : grades)
        for (int k = 0; k < denom; ++k) out.push_back(point(Rational(k, denom), g));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Elem s = add(out[i], out[j]);
            if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
        }
    return out;
}

std::string PhasedLayersCarrier::label(Elem a) const {
    if (a == zero_) return "O";
    const auto& [x, g, s] = enc(a);
    return x.str() + "@" + g.str() + (s ? "!" : "");
}

} // namespace hk
