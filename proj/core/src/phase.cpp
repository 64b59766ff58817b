#include "hk/phase.hpp"

#include <stdexcept>

namespace hk {
namespace {
const Rational kHalf(1, 2);
}

PhaseCarrier::PhaseCarrier(bool weak, bool distributed)
    : weak_(weak), distributed_(distributed) {
    zero_ = intern(CircleSet::zero_only());
    one_ = intern(CircleSet::point(Angle(Rational(0))));
}

bool PhaseCarrier::valid_shape(const CircleSet& s) const {
    if (s.is_full()) return s.has_zero();
    if (s.points().size() == 1 && s.arcs().empty())
        return !s.has_zero();  // a point
    if (s.points().empty() && s.arcs().empty())
        return s.has_zero();  // the zero element
    if (weak_) {
        // closed arc of less than a half turn
        return !s.has_zero() && s.points().empty() && s.arcs().size() == 1 &&
               s.arcs()[0].closed_from && s.arcs()[0].closed_to &&
               s.arcs()[0].from.ccw_to(s.arcs()[0].to) < kHalf;
    }
    if (s.points().size() == 2 && s.arcs().empty())
        // antipode pair with zero
        return s.has_zero() && s.points()[0].antipode() == s.points()[1];
    if (s.points().empty() && s.arcs().size() == 1) {
        const auto& a = s.arcs()[0];
        if (a.closed_from || a.closed_to || s.has_zero()) return false;
        return a.from.ccw_to(a.to) <= kHalf;  // open arc, half circle at most
    }
    return false;
}

Elem PhaseCarrier::element(const CircleSet& s) {
    if (!valid_shape(s))
        throw std::domain_error("phase: " + s.str() + " is not a carrier shape");
    return intern(s);
}

Elem PhaseCarrier::add(Elem a, Elem b) {
    CircleSet s = enc(a).hypersum(enc(b), weak_);
    return element(s);
}

std::vector<Angle> PhaseCarrier::generators(Elem a) const {
    const CircleSet& s = enc(a);
    if (s.is_full()) {
        if (weak_) return {Angle(Rational(0)), Angle(kHalf)};
        return {Angle(Rational(0)), Angle(Rational(1, 4)), Angle(kHalf), Angle(Rational(3, 4))};
    }
    std::vector<Angle> out(s.points().begin(), s.points().end());
    for (const auto& arc : s.arcs()) {
        out.push_back(arc.from);
        out.push_back(arc.to);
        if (arc.from.ccw_to(arc.to) == kHalf)
            out.push_back(arc.from.plus(Angle(Rational(1, 4))));  // open half circle
    }
    return out;
}

CircleSet PhaseCarrier::setwise_product(Elem a, Elem b) const {
    const CircleSet& x = enc(a);
    const CircleSet& y = enc(b);
    CircleSet out;
    bool x_nonempty = x.is_full() || !x.points().empty() || !x.arcs().empty();
    bool y_nonempty = y.is_full() || !y.points().empty() || !y.arcs().empty();
    if ((x.has_zero() && (y_nonempty || y.has_zero())) ||
        (y.has_zero() && (x_nonempty || x.has_zero())))
        out.set_zero(true);
    auto each_rot = [&](const CircleSet& base, const Angle& by) {
        CircleSet r = base.rotated(by);
        r.set_zero(false);
        out = out.unioned(r);
    };
    if (x.is_full() || y.is_full()) {
        if (x_nonempty && y_nonempty) out = out.unioned(CircleSet::full_circle());
        return out;
    }
    for (const auto& p : y.points()) each_rot(x, p);
    for (const auto& p : x.points()) {
        CircleSet yonly = y;
        yonly.set_zero(false);
        CircleSet r = yonly.rotated(p);
        out = out.unioned(r);
    }
    for (const auto& ax : x.arcs())
        for (const auto& ay : y.arcs()) {
            // Minkowski sum of two arcs on the circle
            Rational len = ax.from.ccw_to(ax.to) + ay.from.ccw_to(ay.to);
            Angle from = ax.from.plus(ay.from);
            if (len >= Rational(1)) {
                out = out.unioned(CircleSet::full_circle());
            } else {
                out = out.unioned(CircleSet::arc(from, from.plus(Angle(len)),
                                                 ax.closed_from && ay.closed_from,
                                                 ax.closed_to && ay.closed_to));
            }
        }
    return out;
}

Elem PhaseCarrier::distributed_product(Elem a, Elem b) {
    const CircleSet& x = enc(a);
    const CircleSet& y = enc(b);
    bool x_zero_only = !x.is_full() && x.points().empty() && x.arcs().empty();
    bool y_zero_only = !y.is_full() && y.points().empty() && y.arcs().empty();
    if (x_zero_only || y_zero_only) return zero_;
    Elem acc = -1;
    for (const Angle& g1 : generators(a))
        for (const Angle& g2 : generators(b)) {
            Elem p = intern(CircleSet::point(g1.plus(g2)));
            acc = acc < 0 ? p : add(acc, p);
        }
    return acc;
}

std::optional<Elem> PhaseCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    if (distributed_) return distributed_product(a, b);
    if (tangible(a)) {
        CircleSet r = enc(b).rotated(enc(a).points()[0]);
        return intern(r);
    }
    if (tangible(b)) {
        CircleSet r = enc(a).rotated(enc(b).points()[0]);
        return intern(r);
    }
    return std::nullopt;
}

std::vector<Elem> PhaseCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    int denom = variant == 1 ? 6 : 8;
    for (int k = 0; k < denom; ++k) out.push_back(point(Rational(k, denom)));
    auto arcish = [&](const Rational& f, const Rational& t) {
        return weak_ ? intern(CircleSet::closed_arc(Angle(f), Angle(t)))
                     : intern(CircleSet::open_arc(Angle(f), Angle(t)));
    };
    out.push_back(arcish(Rational(0), Rational(1, denom)));
    out.push_back(arcish(Rational(0), Rational(2, denom)));
    if (variant == 2) out.push_back(arcish(Rational(1, denom), Rational(3, denom)));
    if (!weak_) {
        CircleSet trip = CircleSet::point(Angle(Rational(0)))
                             .unioned(CircleSet::point(Angle(kHalf)));
        trip.set_zero(true);
        out.push_back(intern(trip));
        out.push_back(intern(CircleSet::open_arc(Angle(Rational(0)), Angle(kHalf))));
    }
    CircleSet full = CircleSet::full_circle();
    full.set_zero(true);
    out.push_back(intern(full));
    return out;
}

std::optional<Elem> PhaseCarrier::parse_label(const std::string&) {
    return std::nullopt;  // phase elements are addressed programmatically
}

ProductDiscrepancy phase_product_discrepancy(PhaseCarrier& c, int window_variant) {
    ProductDiscrepancy d;
    auto win = c.window(window_variant);
    for (Elem a : win)
        for (Elem b : win) {
            CircleSet raw = c.setwise_product(a, b);
            Elem dist = c.distributed_product(a, b);
            bool in_carrier = c.valid_shape(raw);
            bool agree = in_carrier && raw == c.enc(dist);
            if (!agree) {
                d.found = true;
                d.left_operand = c.label(a);
                d.right_operand = c.label(b);
                d.setwise = raw.str();
                d.distributed = c.label(dist);
                d.setwise_in_carrier = in_carrier;
                return d;
            }
        }
    return d;
}

} // namespace hk
