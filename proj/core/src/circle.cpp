#include "hk/circle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hk {
namespace {

const Rational kHalf(1, 2);
const Rational kOne(1);
const Rational kZeroR(0);

} // namespace

CircleSet CircleSet::zero_only() {
    CircleSet s;
    s.has_zero_ = true;
    return s;
}

CircleSet CircleSet::point(const Angle& a) {
    CircleSet s;
    s.points_.push_back(a);
    return s;
}

CircleSet CircleSet::open_arc(const Angle& from, const Angle& to) {
    return arc(from, to, false, false);
}

CircleSet CircleSet::closed_arc(const Angle& from, const Angle& to) {
    return arc(from, to, true, true);
}

CircleSet CircleSet::arc(const Angle& from, const Angle& to, bool cf, bool ct) {
    if (from == to) throw std::logic_error("CircleSet: zero/full-length arc");
    CircleSet s;
    s.arcs_.push_back({from, to, cf, ct});
    s.normalize();
    return s;
}

CircleSet CircleSet::full_circle() {
    CircleSet s;
    s.full_ = true;
    return s;
}

bool CircleSet::contains(const Angle& a) const {
    if (full_) return true;
    for (const auto& p : points_)
        if (p == a) return true;
    for (const auto& arc : arcs_) {
        Rational pos = arc.from.ccw_to(a);
        Rational len = arc.from.ccw_to(arc.to);
        if (pos == kZeroR) {
            if (arc.closed_from) return true;
        } else if (pos == len) {
            if (arc.closed_to) return true;
        } else if (pos < len) {
            return true;
        }
    }
    return false;
}

bool CircleSet::subset_of(const CircleSet& o) const {
    if (has_zero_ && !o.has_zero_) return false;
    if (o.full_) return true;
    if (full_) return false;
    for (const auto& p : points_)
        if (!o.contains(p)) return false;
    for (const auto& a : arcs_) {
        // a connected arc fits inside exactly one component of a canonical set
        bool inside = false;
        Rational len = a.from.ccw_to(a.to);
        for (const auto& b : o.arcs_) {
            Rational off = b.from.ccw_to(a.from);
            Rational blen = b.from.ccw_to(b.to);
            if (off > blen || off + len > blen) continue;
            if (off == kZeroR && a.closed_from && !b.closed_from) continue;
            if (off + len == blen && a.closed_to && !b.closed_to) continue;
            inside = true;
            break;
        }
        if (!inside) return false;
    }
    return true;
}

CircleSet CircleSet::unioned(const CircleSet& o) const {
    CircleSet s;
    s.has_zero_ = has_zero_ || o.has_zero_;
    s.full_ = full_ || o.full_;
    if (!s.full_) {
        s.points_ = points_;
        s.points_.insert(s.points_.end(), o.points_.begin(), o.points_.end());
        s.arcs_ = arcs_;
        s.arcs_.insert(s.arcs_.end(), o.arcs_.begin(), o.arcs_.end());
    }
    s.normalize();
    return s;
}

CircleSet CircleSet::rotated(const Angle& by) const {
    CircleSet s;
    s.has_zero_ = has_zero_;
    s.full_ = full_;
    for (const auto& p : points_) s.points_.push_back(p.plus(by));
    for (const auto& a : arcs_)
        s.arcs_.push_back({a.from.plus(by), a.to.plus(by), a.closed_from, a.closed_to});
    s.normalize();
    return s;
}

void CircleSet::add_point(const Angle& a) { points_.push_back(a); }
void CircleSet::add_arc(Arc a) { arcs_.push_back(std::move(a)); }

void CircleSet::normalize() {
    if (full_) {
        points_.clear();
        arcs_.clear();
        return;
    }
    // Unwrap everything into closed/open segments [s,e] inside [0,1]; a
    // wrapping arc is split at angle 0, closed on both sides of the cut.
    struct Seg {
        Rational s, e;
        bool cs, ce;
    };
    std::vector<Seg> segs;
    for (const auto& p : points_) segs.push_back({p.turns(), p.turns(), true, true});
    for (const auto& a : arcs_) {
        Rational s = a.from.turns();
        Rational len = a.from.ccw_to(a.to);
        if (len == kZeroR) throw std::logic_error("CircleSet: degenerate arc");
        Rational e = s + len;
        if (e <= kOne) {
            segs.push_back({s, e, a.closed_from, a.closed_to});
        } else {
            segs.push_back({s, kOne, a.closed_from, true});
            segs.push_back({kZeroR, e - kOne, true, a.closed_to});
        }
    }
    points_.clear();
    arcs_.clear();
    if (segs.empty()) return;

    std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) {
        if (x.s != y.s) return x.s < y.s;
        if (x.cs != y.cs) return x.cs;  // closed start first
        return x.e > y.e;
    });
    std::vector<Seg> merged;
    for (const auto& seg : segs) {
        if (!merged.empty()) {
            Seg& last = merged.back();
            bool touches = seg.s < last.e || (seg.s == last.e && (last.ce || seg.cs));
            if (touches) {
                if (seg.e > last.e) {
                    last.e = seg.e;
                    last.ce = seg.ce;
                } else if (seg.e == last.e) {
                    last.ce = last.ce || seg.ce;
                }
                if (seg.s == last.s) last.cs = last.cs || seg.cs;
                continue;
            }
        }
        merged.push_back(seg);
    }
    // seam merge at angle 0/1
    bool wrapped = false;
    if (merged.size() >= 2) {
        Seg& first = merged.front();
        Seg& last = merged.back();
        if (last.e == kOne && first.s == kZeroR && (last.ce || first.cs)) {
            // join through the seam into one wrapped arc
            Arc a{Angle(last.s), Angle(first.e), last.cs, first.ce};
            merged.erase(merged.begin());
            merged.pop_back();
            arcs_.push_back(a);
            wrapped = true;
        }
    }
    if (!wrapped && merged.size() == 1 && merged[0].s == kZeroR && merged[0].e == kOne) {
        if (merged[0].cs || merged[0].ce) {
            full_ = true;
            arcs_.clear();
            return;
        }
        throw std::logic_error("CircleSet: full circle minus a point is not representable");
    }
    for (const auto& seg : merged) {
        if (seg.s == seg.e) {
            points_.push_back(Angle(seg.s));
        } else if (seg.s == kZeroR && seg.e == kOne) {
            throw std::logic_error("CircleSet: unexpected full segment");
        } else {
            arcs_.push_back({Angle(seg.s), Angle(seg.e), seg.cs, seg.ce});
        }
    }
    // a wrapped arc of full length together with closure means full circle
    for (const auto& a : arcs_) {
        if (a.from == a.to) throw std::logic_error("CircleSet: full-turn arc");
    }
    std::sort(points_.begin(), points_.end());
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
        return x.from < y.from;
    });
}

CircleSet phase_point_sum(const Angle& a, const Angle& b, bool weak) {
    if (a == b) return CircleSet::point(a);
    if (a.antipode() == b) {
        if (weak) {
            CircleSet s = CircleSet::full_circle();
            s.set_zero(true);
            return s;
        }
        CircleSet s = CircleSet::point(a).unioned(CircleSet::point(b));
        s.set_zero(true);
        return s;
    }
    Rational d = a.ccw_to(b);
    Angle from = d < kHalf ? a : b;
    Angle to = d < kHalf ? b : a;
    return weak ? CircleSet::closed_arc(from, to) : CircleSet::open_arc(from, to);
}

namespace {

/// Open arc (a,b) (length in (0, 1/2]) hypersummed with a point.
CircleSet open_arc_sum_point(const Angle& a, const Angle& b, const Angle& v, bool weak) {
    Rational len = a.ccw_to(b);
    assert(len > kZeroR && len <= kHalf);
    Rational da = a.ccw_to(v);
    if (da <= len) {
        // v inside the closure [a,b]
        if (weak && da == kZeroR) return CircleSet::arc(a, b, true, false);
        if (weak && da == len) return CircleSet::arc(a, b, false, true);
        return CircleSet::open_arc(a, b);
    }
    Rational r = da - len;  // v = b + r, r in (0, 1-len)
    if (r < kHalf - len) return weak ? CircleSet::arc(a, v, false, true)
                                     : CircleSet::open_arc(a, v);
    if (r == kHalf - len) {
        // v is the antipode of a
        return weak ? CircleSet::arc(a, v, false, true) : CircleSet::open_arc(a, v);
    }
    if (r < kHalf) {
        CircleSet s = CircleSet::full_circle();
        s.set_zero(true);
        return s;
    }
    // r in [1/2, 1-len): behind the arc
    return weak ? CircleSet::arc(v, b, true, false) : CircleSet::open_arc(v, b);
}

CircleSet arc_sum_point(const CircleSet::Arc& arc, const Angle& v, bool weak) {
    CircleSet out = open_arc_sum_point(arc.from, arc.to, v, weak);
    if (arc.closed_from) out = out.unioned(phase_point_sum(arc.from, v, weak));
    if (arc.closed_to) out = out.unioned(phase_point_sum(arc.to, v, weak));
    return out;
}

bool arcs_antipodally_overlap(const CircleSet::Arc& x, const CircleSet::Arc& y) {
    // open-interior intersection of (x.from,x.to) with the antipode of
    // (y.from,y.to)
    Angle c = y.from.antipode();
    Rational lenx = x.from.ccw_to(x.to);
    Rational leny = y.from.ccw_to(y.to);
    // intervals (0, lenx) and (off, off+leny) on the circle, off = pos of c
    Rational off = x.from.ccw_to(c);
    // overlap if some t in (0,lenx) with t - off mod 1 in (0,leny)
    // check both unwrapped copies of the second interval
    for (Rational shift : {Rational(0), Rational(-1)}) {
        Rational lo = off + shift, hi = off + leny + shift;
        Rational s = std::max(lo, kZeroR), e = std::min(hi, lenx);
        if (s < e) return true;
    }
    return false;
}

CircleSet open_arc_sum_open_arc(const CircleSet::Arc& x, const CircleSet::Arc& y, bool weak) {
    if (arcs_antipodally_overlap(x, y)) {
        CircleSet s = CircleSet::full_circle();
        s.set_zero(true);
        return s;
    }
    // hull: smallest arc covering both; its start is one of the two starts
    auto span_from = [&](const Angle& s) {
        Rational m = s.ccw_to(x.to);
        m = std::max(m, s.ccw_to(y.to));
        m = std::max(m, s.ccw_to(x.from));
        m = std::max(m, s.ccw_to(y.from));
        return m;
    };
    Rational span_x = span_from(x.from);
    Rational span_y = span_from(y.from);
    Angle s = span_x <= span_y ? x.from : y.from;
    Rational span = std::min(span_x, span_y);
    if (span > kHalf)
        throw std::logic_error("CircleSet: arc sum hull exceeds a half turn");
    Angle e = s.plus(Angle(span));
    return weak ? CircleSet::closed_arc(s, e) : CircleSet::open_arc(s, e);
}

CircleSet arc_sum_arc(const CircleSet::Arc& x, const CircleSet::Arc& y, bool weak) {
    CircleSet::Arc ox{x.from, x.to, false, false};
    CircleSet::Arc oy{y.from, y.to, false, false};
    CircleSet out = open_arc_sum_open_arc(ox, oy, weak);
    if (x.closed_from) out = out.unioned(arc_sum_point(oy, x.from, weak));
    if (x.closed_to) out = out.unioned(arc_sum_point(oy, x.to, weak));
    if (y.closed_from) out = out.unioned(arc_sum_point(ox, y.from, weak));
    if (y.closed_to) out = out.unioned(arc_sum_point(ox, y.to, weak));
    if (x.closed_from && y.closed_from)
        out = out.unioned(phase_point_sum(x.from, y.from, weak));
    if (x.closed_from && y.closed_to) out = out.unioned(phase_point_sum(x.from, y.to, weak));
    if (x.closed_to && y.closed_from) out = out.unioned(phase_point_sum(x.to, y.from, weak));
    if (x.closed_to && y.closed_to) out = out.unioned(phase_point_sum(x.to, y.to, weak));
    return out;
}

} // namespace

CircleSet CircleSet::hypersum_point(const Angle& p, bool weak) const {
    CircleSet out;
    if (has_zero_) out = out.unioned(CircleSet::point(p));
    if (full_) {
        CircleSet s = CircleSet::full_circle();
        s.set_zero(true);
        return out.unioned(s);
    }
    for (const auto& q : points_) out = out.unioned(phase_point_sum(q, p, weak));
    for (const auto& a : arcs_) out = out.unioned(arc_sum_point(a, p, weak));
    return out;
}

CircleSet CircleSet::hypersum(const CircleSet& o, bool weak) const {
    CircleSet out;
    if (has_zero_) {
        CircleSet rest = o;
        rest.set_zero(false);
        out = out.unioned(rest);
        if (o.has_zero_) out.set_zero(true);
    }
    if (o.has_zero_) {
        CircleSet rest = *this;
        rest.set_zero(false);
        out = out.unioned(rest);
    }
    bool self_nonempty = full_ || !points_.empty() || !arcs_.empty();
    bool other_nonempty = o.full_ || !o.points_.empty() || !o.arcs_.empty();
    if ((full_ && other_nonempty) || (o.full_ && self_nonempty)) {
        CircleSet s = CircleSet::full_circle();
        s.set_zero(true);
        return out.unioned(s);
    }
    for (const auto& p : points_) {
        for (const auto& q : o.points_) out = out.unioned(phase_point_sum(p, q, weak));
        for (const auto& a : o.arcs_) out = out.unioned(arc_sum_point(a, p, weak));
    }
    for (const auto& a : arcs_) {
        for (const auto& q : o.points_) out = out.unioned(arc_sum_point(a, q, weak));
        for (const auto& b : o.arcs_) out = out.unioned(arc_sum_arc(a, b, weak));
    }
    return out;
}

std::string CircleSet::str() const {
    std::string out = "{";
    bool first = true;
    auto app = [&](const std::string& s) {
        if (!first) out += " ";
        out += s;
        first = false;
    };
    if (has_zero_) app("0");
    if (full_) app("S1");
    for (const auto& p : points_) app(p.str());
    for (const auto& a : arcs_)
        app(std::string(a.closed_from ? "[" : "(") + a.from.str() + ";" + a.to.str() +
            (a.closed_to ? "]" : ")"));
    return out + "}";
}

} // namespace hk
