#pragma once

#include "hk/carrier.hpp"
#include "hk/table.hpp"

namespace hk {

/// Carrier view of a finite system table.  The surpassing relation is decided
/// per the attached SurpassSpec:
///   circ      b1 + c = b2 for some quasi-zero c       (existential scan)
///   ideal(I)  b1 + c = b2 for some c in I
///   explicit  the stored reflexive-transitive pairs
///   inclusion labels must be subset labels "{a,b,...}"; decided setwise
class TableCarrier : public Carrier {
public:
    explicit TableCarrier(FiniteSystemTable table);

    std::string name() const override { return table_.name; }
    Elem zero() override { return table_.zero; }
    std::optional<Elem> one() override { return table_.one; }
    Elem add(Elem a, Elem b) override { return table_.add[a][b]; }
    Elem neg(Elem a) override { return table_.neg[a]; }
    std::optional<Elem> mul(Elem a, Elem b) override { return table_.mul[a][b]; }
    bool total_mul() const override { return total_mul_; }
    bool tangible(Elem a) override { return table_.tangible[a]; }
    bool leq(Elem b1, Elem b2) override;
    std::vector<Elem> window(int = 0) override;
    bool window_closed(int) const override { return true; }
    bool finite() const override { return true; }
    std::string label(Elem a) const override { return table_.label(a); }
    std::optional<Elem> parse_label(const std::string& s) override {
        return table_.find_label(s);
    }

    const FiniteSystemTable& table() const { return table_; }

private:
    FiniteSystemTable table_;
    bool total_mul_ = false;
    std::vector<Elem> surpass_candidates_;      // c-scan set for circ/ideal
    std::vector<SubsetVal> inclusion_sets_;     // per element, Inclusion only
};

} // namespace hk
