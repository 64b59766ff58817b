#include "hk/symmetrize.hpp"

namespace hk {

SymmetrizedCarrier::SymmetrizedCarrier(std::shared_ptr<Carrier> base, bool bipotent_variant,
                                       std::string name)
    : base_(std::move(base)), bipotent_variant_(bipotent_variant) {
    name_ = name.empty()
                ? (bipotent_variant_ ? "symmetrized-bipotent(" : "symmetrized(") +
                      base_->name() + ")"
                : std::move(name);
    Elem bz = base_->zero();
    zero_ = intern_pair(bz, bz);
    auto bone = base_->one();
    if (!bone) throw std::domain_error("symmetrize: base carrier must have a unit");
    one_ = intern_pair(*bone, bz);
}

Elem SymmetrizedCarrier::intern_pair(Elem pos, Elem negc) { return intern({pos, negc}); }

bool SymmetrizedCarrier::base_tangible(Elem base_elem) const {
    return const_cast<Carrier&>(*base_).tangible(base_elem);
}

Elem SymmetrizedCarrier::add(Elem a, Elem b) {
    auto [a0, a1] = enc(a);
    auto [b0, b1] = enc(b);
    if (!bipotent_variant_)
        return intern_pair(base_->add(a0, b0), base_->add(a1, b1));

    // modified addition on {(0,0)} u T^ u T^deg, case split per the shape of
    // the two operands
    const Elem bz = base_->zero();
    if (a == zero_) return b;
    if (b == zero_) return a;
    auto shape = [&](Elem p0, Elem p1) { return p1 == bz ? 0 : (p0 == bz ? 1 : 2); };
    int sa = shape(a0, a1), sb = shape(b0, b1);
    Elem va = sa == 1 ? a1 : a0;
    Elem vb = sb == 1 ? b1 : b0;
    Elem s = base_->add(va, vb);
    if (sa == sb) {
        // same shape: positive+positive, negative+negative, or circ+circ
        if (sa == 0) return intern_pair(s, bz);
        if (sa == 1) return intern_pair(bz, s);
        return intern_pair(s, s);
    }
    if (sa == 2 || sb == 2) {
        // tangible against a quasi-zero: the dominant value decides
        Elem tang = sa == 2 ? b : a;
        Elem tv = sa == 2 ? vb : va;
        Elem cv = sa == 2 ? va : vb;
        if (s == tv && tv != cv) return tang;
        return intern_pair(s, s);
    }
    // opposite tangible shapes
    if (va == vb) return intern_pair(va, va);
    if (s == va) return a;
    return b;
}

Elem SymmetrizedCarrier::neg(Elem a) {
    auto [a0, a1] = enc(a);
    return intern_pair(a1, a0);
}

std::optional<Elem> SymmetrizedCarrier::mul(Elem a, Elem b) {
    auto [a0, a1] = enc(a);
    auto [b0, b1] = enc(b);
    auto p00 = base_->mul(a0, b0);
    auto p11 = base_->mul(a1, b1);
    auto p01 = base_->mul(a0, b1);
    auto p10 = base_->mul(a1, b0);
    if (!p00 || !p11 || !p01 || !p10) return std::nullopt;
    return intern_pair(base_->add(*p00, *p11), base_->add(*p01, *p10));
}

bool SymmetrizedCarrier::tangible(Elem a) {
    auto [a0, a1] = enc(a);
    const Elem bz = base_->zero();
    return (a1 == bz && base_tangible(a0)) || (a0 == bz && base_tangible(a1));
}

bool SymmetrizedCarrier::null(Elem b) {
    auto [b0, b1] = enc(b);
    return b0 == b1;
}

bool SymmetrizedCarrier::leq(Elem b1, Elem b2) {
    // b1 + (x,x) = b2 for some x; solve on the positive component and check
    // the negative one
    auto [p1, q1] = enc(b1);
    auto [p2, q2] = enc(b2);
    if (bipotent_variant_) {
        if (b1 == b2) return true;
        // only quasi-zeros strictly dominate: (x,x) absorbs smaller tangibles
        if (p2 != q2) return false;
        return add(b1, intern_pair(p2, q2)) == b2;
    }
    auto cands = base_->add_solutions(p1, p2);
    auto more = base_->add_solutions(q1, q2);
    cands.insert(cands.end(), more.begin(), more.end());
    for (Elem x : cands)
        if (base_->add(p1, x) == p2 && base_->add(q1, x) == q2) return true;
    return false;
}

std::vector<Elem> SymmetrizedCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    const Elem bz = base_->zero();
    auto bw = base_->window(variant);
    if (bipotent_variant_) {
        for (Elem a : bw) {
            if (!base_tangible(a)) continue;
            out.push_back(intern_pair(a, bz));
            out.push_back(intern_pair(bz, a));
            out.push_back(intern_pair(a, a));
        }
    } else {
        for (Elem a : bw)
            for (Elem b : bw) {
                Elem p = intern_pair(a, b);
                if (p != zero_) out.push_back(p);
            }
    }
    return out;
}

std::string SymmetrizedCarrier::label(Elem a) const {
    auto [a0, a1] = enc(a);
    return "(" + base_->label(a0) + "|" + base_->label(a1) + ")";
}

std::optional<Elem> SymmetrizedCarrier::parse_label(const std::string& s) {
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') return std::nullopt;
    auto bar = s.find('|');
    if (bar == std::string::npos) return std::nullopt;
    auto p0 = base_->parse_label(s.substr(1, bar - 1));
    auto p1 = base_->parse_label(s.substr(bar + 1, s.size() - bar - 2));
    if (!p0 || !p1) return std::nullopt;
    return intern_pair(*p0, *p1);
}

} // namespace hk
