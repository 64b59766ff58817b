#pragma once

#include "hk/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hk {

/// Angle on the unit circle in turns, reduced mod 1 into [0,1).
class Angle {
public:
    Angle() : t_(0) {}
    explicit Angle(const Rational& turns) : t_(reduce(turns)) {}

    const Rational& turns() const { return t_; }
    Angle antipode() const { return Angle(t_ + Rational(1, 2)); }
    Angle plus(const Angle& o) const { return Angle(t_ + o.t_); }

    /// Distance from this angle counterclockwise up to `o`, in [0,1).
    Rational ccw_to(const Angle& o) const { return reduce(o.t_ - t_); }

    friend bool operator==(const Angle&, const Angle&) = default;
    friend auto operator<=>(const Angle& a, const Angle& b) { return a.t_ <=> b.t_; }

    std::string str() const { return t_.str(); }

private:
    static Rational reduce(const Rational& r) {
        // r mod 1 into [0,1)
        std::int64_t q = r.num() / r.den();
        Rational f = r - Rational(q);
        if (f < Rational(0)) f = f + Rational(1);
        return f;
    }
    Rational t_;
};

/// Finite union of points and arcs on the circle, plus a flag for the zero
/// element of the surrounding hyperfield.  Canonical form: components sorted
/// by start angle, overlapping or touching pieces merged, so equality is
/// structural.  Arcs carry independent endpoint-closedness flags; a full
/// circle is the single component kind Full.
class CircleSet {
public:
    struct Arc {
        Angle from, to;      // counterclockwise from->to, length in (0,1)
        bool closed_from = false;
        bool closed_to = false;

        friend bool operator==(const Arc&, const Arc&) = default;
        friend auto operator<=>(const Arc&, const Arc&) = default;
    };

    CircleSet() = default;

    static CircleSet empty() { return {}; }
    static CircleSet zero_only();
    static CircleSet point(const Angle& a);
    static CircleSet open_arc(const Angle& from, const Angle& to);
    static CircleSet closed_arc(const Angle& from, const Angle& to);
    static CircleSet arc(const Angle& from, const Angle& to, bool cf, bool ct);
    static CircleSet full_circle();

    bool has_zero() const { return has_zero_; }
    void set_zero(bool z) { has_zero_ = z; }
    bool is_full() const { return full_; }
    bool empty_set() const { return !full_ && points_.empty() && arcs_.empty() && !has_zero_; }

    const std::vector<Angle>& points() const { return points_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool contains(const Angle& a) const;
    bool subset_of(const CircleSet& o) const;

    CircleSet unioned(const CircleSet& o) const;
    CircleSet rotated(const Angle& by) const;  // multiplication by a point
    CircleSet antipodal() const { return rotated(Angle(Rational(1, 2))); }

    /// Elementwise phase hypersum with a single circle point.  `weak` selects
    /// the weak phase hyperfield (closed arcs) over the phase hyperfield
    /// (open arcs).
    CircleSet hypersum_point(const Angle& p, bool weak) const;
    /// Elementwise hypersum of two sets.
    CircleSet hypersum(const CircleSet& o, bool weak) const;

    friend bool operator==(const CircleSet&, const CircleSet&) = default;
    friend auto operator<=>(const CircleSet&, const CircleSet&) = default;

    std::string str() const;

private:
    void add_point(const Angle& a);
    void add_arc(Arc a);
    void normalize();

    bool has_zero_ = false;
    bool full_ = false;
    std::vector<Angle> points_;  // isolated points, sorted
    std::vector<Arc> arcs_;      // disjoint, sorted by start
};

/// Pointwise phase hypersum a + b (both nonzero points):
///   a == b        -> {a}
///   a == -b       -> {-a, 0, a}       (phase) | S^1 u {0} (weak phase)
///   otherwise     -> open (weak: closed) arc of less than a half turn
CircleSet phase_point_sum(const Angle& a, const Angle& b, bool weak);

} // namespace hk
