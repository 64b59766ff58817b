#pragma once

#include "hk/report.hpp"
#include "hk/subset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hk {

/// Surpassing-relation specification attached to a finite system table.
struct SurpassSpec {
    enum class Variant { Circ, Ideal, Explicit, Inclusion };
    Variant variant = Variant::Circ;
    std::vector<Elem> ideal_members;               // Ideal
    std::vector<std::pair<Elem, Elem>> pairs;      // Explicit (b1 precedes b2)

    static SurpassSpec circ() { return {Variant::Circ, {}, {}}; }
    static SurpassSpec ideal(std::vector<Elem> m) { return {Variant::Ideal, std::move(m), {}}; }
    static SurpassSpec explicit_pairs(std::vector<std::pair<Elem, Elem>> p) {
        return {Variant::Explicit, {}, std::move(p)};
    }
    static SurpassSpec inclusion() { return {Variant::Inclusion, {}, {}}; }

    std::string variant_name() const;
};

/// A finite hyperstructure given by explicit tables: carrier, set-valued
/// addition, single-valued multiplication, negation, zero, one.
///
/// Addition is stored fully symmetric; parse completes the a<=b half.
struct FiniteHyperTable {
    std::string name;
    std::vector<std::string> labels;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> neg;                    // involution
    std::vector<std::vector<SubsetVal>> add;  // n x n, values nonempty
    std::vector<std::vector<Elem>> mul;       // n x n

    int size() const { return static_cast<int>(labels.size()); }
    const std::string& label(Elem x) const { return labels.at(x); }
    std::optional<Elem> find_label(const std::string& s) const;

    const SubsetVal& hyperadd(Elem a, Elem b) const { return add[a][b]; }
    SubsetVal add_sets(const SubsetVal& s1, const SubsetVal& s2) const;
    SubsetVal add_set_elem(const SubsetVal& s, Elem a) const;
    SubsetVal mul_sets(const SubsetVal& s1, const SubsetVal& s2) const;  // eq. style: elementwise
    SubsetVal neg_set(const SubsetVal& s) const;

    /// True when every addition value is a singleton (classical ring/semiring).
    bool is_single_valued() const;

    /// Structural invariants: involution, nonempty sums, absorbing zero,
    /// neutral zero, unit.  Throws ValidationError naming the violated
    /// invariant with a witness.
    void validate() const;
};

/// A finite system table (A, T, (-), surpass) with single-valued addition.
/// mul may be partial: only the tangible action rows present, or total.
struct FiniteSystemTable {
    std::string name;
    std::vector<std::string> labels;
    Elem zero = 0;
    std::optional<Elem> one;
    std::vector<bool> tangible;
    std::vector<Elem> neg;
    std::vector<std::vector<Elem>> add;                  // total
    std::vector<std::vector<std::optional<Elem>>> mul;   // partial or total
    SurpassSpec surpass;

    int size() const { return static_cast<int>(labels.size()); }
    const std::string& label(Elem x) const { return labels.at(x); }
    std::optional<Elem> find_label(const std::string& s) const;

    bool mul_total() const;

    /// Structural invariants: associativity and commutativity of add,
    /// neutral zero, involution, tangible closure under total mul.
    void validate() const;
};

std::string subset_label(const FiniteHyperTable& t, const SubsetVal& s);

} // namespace hk
