#pragma once

#include "hk/carrier.hpp"
#include "hk/closure.hpp"
#include "hk/table.hpp"

namespace hk {

/// The hypersystem of a hyperring H: the submonoid of nonempty subsets of H
/// generated by the singletons under setwise hyperaddition, with T the
/// nonzero singletons, elementwise negation and inclusion as the surpassing
/// relation.
///
/// Multiplication is the setwise product when the table is doubly
/// distributive; otherwise the distributed product (sum of pairwise products
/// of tangible generators) is used when `distributed` is set, and the product
/// is partial (tangible action only) when it is not.
class HypersystemCarrier : public Carrier {
public:
    HypersystemCarrier(FiniteHyperTable base, bool distributed,
                       std::size_t cap = kDefaultClosureCap);

    std::string name() const override { return name_; }
    Elem zero() override { return zero_; }
    std::optional<Elem> one() override { return one_; }
    Elem add(Elem a, Elem b) override;
    Elem neg(Elem a) override;
    std::optional<Elem> mul(Elem a, Elem b) override;
    bool total_mul() const override { return setwise_mul_ || distributed_; }
    bool tangible(Elem a) override;
    bool leq(Elem b1, Elem b2) override { return set_of(b1).subset_of(set_of(b2)); }
    bool null(Elem b) override { return set_of(b).contains(base_.zero); }
    std::vector<Elem> window(int = 0) override { return universe_; }
    bool window_closed(int) const override { return true; }
    bool finite() const override { return true; }
    std::string label(Elem a) const override;
    std::optional<Elem> parse_label(const std::string& s) override;

    const FiniteHyperTable& base() const { return base_; }
    const SubsetVal& set_of(Elem a) const { return elems_.at(a); }
    Elem elem_for(const SubsetVal& s) const;
    Elem singleton_elem(Elem base_elem) const;
    bool setwise_mul() const { return setwise_mul_; }
    /// Setwise product {s1*s2}; may leave the carrier for non doubly
    /// distributive tables, in which case the raw set is returned and
    /// `in_carrier` is false.
    std::pair<SubsetVal, bool> setwise_product(Elem a, Elem b) const;
    /// The distributed product of eq-style sums of generators.
    Elem distributed_product(Elem a, Elem b);
    const std::vector<Elem>& generators_of(Elem a) const { return decomp_.at(a); }

private:
    Elem intern(const SubsetVal& s, std::vector<Elem> decomp);

    FiniteHyperTable base_;
    std::string name_;
    bool distributed_ = false;
    bool setwise_mul_ = false;
    Elem zero_ = 0;
    std::optional<Elem> one_;
    std::vector<SubsetVal> elems_;
    std::map<SubsetVal, Elem> index_;
    std::vector<std::vector<Elem>> decomp_;  // one generator list per element
    std::vector<Elem> universe_;
};

/// Exhaustive double-distributivity comparison on the base table
/// (needed to decide whether the setwise product is lawful).
bool doubly_distributive(const FiniteHyperTable& t);

} // namespace hk
