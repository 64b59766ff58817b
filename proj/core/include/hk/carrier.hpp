#pragma once

#include "hk/report.hpp"
#include "hk/subset.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hk {

/// A triple-with-surpassing (A, T, (-), preceq).  Elements are dense handles
/// managed by the carrier; symbolic families intern encodings lazily, so the
/// same handle always denotes the same element and equality is handle
/// equality.  Operations are total on handles.
///
/// Finite carriers enumerate their whole universe through window(); infinite
/// (symbolic) ones expose deterministic finite sample windows, and every
/// universally quantified check run on them is window-verified, not proved.
class Carrier {
public:
    virtual ~Carrier() = default;

    virtual std::string name() const = 0;

    virtual Elem zero() = 0;
    virtual std::optional<Elem> one() { return std::nullopt; }
    virtual Elem add(Elem a, Elem b) = 0;
    virtual Elem neg(Elem a) = 0;
    /// Product; std::nullopt where the table is partial (non-tangible rows of
    /// an action-only structure).
    virtual std::optional<Elem> mul(Elem a, Elem b) = 0;
    virtual bool total_mul() const { return true; }

    virtual bool tangible(Elem a) = 0;
    /// Native surpassing relation b1 preceq b2.
    virtual bool leq(Elem b1, Elem b2) = 0;
    /// b in A_Null, i.e. b surpasses zero.
    virtual bool null(Elem b) { return leq(zero(), b); }

    /// Deterministic sample of elements (always contains zero; the whole
    /// carrier when finite).  `variant` selects among the declared windows.
    virtual std::vector<Elem> window(int variant = 0) = 0;
    virtual int window_count() const { return 1; }
    /// Whether window(variant) is closed under addition.
    virtual bool window_closed(int variant) const { (void)variant; return false; }
    virtual bool finite() const { return false; }

    virtual std::string label(Elem a) const = 0;
    virtual std::optional<Elem> parse_label(const std::string& s) = 0;

    /// All x with a + x = target, up to the carrier's ability to solve; the
    /// default scans window(0).  Families with exact solvers override this
    /// (it feeds the circ-surpassing decision of derived carriers).
    virtual std::vector<Elem> add_solutions(Elem a, Elem target) {
        std::vector<Elem> out;
        for (Elem x : window(0))
            if (add(a, x) == target) out.push_back(x);
        return out;
    }

    /// Some x in T0 with a * x = target, when the carrier can solve the
    /// division exactly; the default scans the window.  Used by the
    /// nabla-inversion sweep, whose witnesses can lie outside a finite
    /// window of an infinite carrier.
    virtual std::optional<Elem> div_tangible(Elem a, Elem target) {
        for (Elem x : window(0)) {
            if (!(tangible(x) || x == zero())) continue;
            auto p = mul(a, x);
            if (p && *p == target) return x;
        }
        return std::nullopt;
    }

    // Convenience forms.
    Elem sub(Elem a, Elem b) { return add(a, neg(b)); }         // a (-) b
    Elem quasi_zero(Elem a) { return add(a, neg(a)); }          // a^circ
    std::vector<std::string> labels(const std::vector<Elem>& xs) const {
        std::vector<std::string> out;
        out.reserve(xs.size());
        for (Elem x : xs) out.push_back(label(x));
        return out;
    }
};

/// Base for symbolic carriers: interns family-specific encodings to handles.
/// Handles are assigned in first-seen order, so deterministic op sequences
/// produce deterministic numbering.
template <class Enc>
class InternedCarrier : public Carrier {
public:
    Elem intern(const Enc& e) {
        auto [it, fresh] = index_.try_emplace(e, static_cast<Elem>(elems_.size()));
        if (fresh) elems_.push_back(e);
        return it->second;
    }
    const Enc& enc(Elem i) const { return elems_.at(static_cast<std::size_t>(i)); }
    std::size_t interned_count() const { return elems_.size(); }

private:
    std::vector<Enc> elems_;
    std::map<Enc, Elem> index_;
};

/// Restriction of a carrier to an explicit window (used for sub-triples such
/// as the irreducible core).  Operations still run in the parent carrier.
class WindowView : public Carrier {
public:
    WindowView(Carrier& parent, std::vector<Elem> window, std::string suffix)
        : parent_(parent), window_(std::move(window)), suffix_(std::move(suffix)) {}

    std::string name() const override { return parent_.name() + suffix_; }
    Elem zero() override { return parent_.zero(); }
    std::optional<Elem> one() override { return parent_.one(); }
    Elem add(Elem a, Elem b) override { return parent_.add(a, b); }
    Elem neg(Elem a) override { return parent_.neg(a); }
    std::optional<Elem> mul(Elem a, Elem b) override { return parent_.mul(a, b); }
    bool total_mul() const override { return parent_.total_mul(); }
    bool tangible(Elem a) override { return restrict_tangible_ ? in_window(a) && parent_.tangible(a) : parent_.tangible(a); }
    bool leq(Elem b1, Elem b2) override { return parent_.leq(b1, b2); }
    bool null(Elem b) override { return parent_.null(b); }
    std::vector<Elem> window(int) override { return window_; }
    bool finite() const override { return parent_.finite(); }
    std::string label(Elem a) const override { return parent_.label(a); }
    std::optional<Elem> parse_label(const std::string& s) override { return parent_.parse_label(s); }

    void set_restrict_tangible(bool v) { restrict_tangible_ = v; }
    bool in_window(Elem a) const {
        for (Elem w : window_)
            if (w == a) return true;
        return false;
    }

private:
    Carrier& parent_;
    std::vector<Elem> window_;
    std::string suffix_;
    bool restrict_tangible_ = false;
};

} // namespace hk
