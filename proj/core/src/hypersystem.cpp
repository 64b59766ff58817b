#include "hk/hypersystem.hpp"

namespace hk {

bool doubly_distributive(const FiniteHyperTable& t) {
    const int n = t.size();
    for (Elem a0 = 0; a0 < n; ++a0)
        for (Elem a1 = 0; a1 < n; ++a1)
            for (Elem b0 = 0; b0 < n; ++b0)
                for (Elem b1 = 0; b1 < n; ++b1) {
                    SubsetVal lhs = t.mul_sets(t.add[a0][a1], t.add[b0][b1]);
                    SubsetVal rhs = t.add_sets(t.add_sets(t.hyperadd(t.mul[a0][b0], t.mul[a1][b0]),
                                                          SubsetVal::singleton(t.mul[a0][b1])),
                                               SubsetVal::singleton(t.mul[a1][b1]));
                    if (lhs != rhs) return false;
                }
    return true;
}

HypersystemCarrier::HypersystemCarrier(FiniteHyperTable base, bool distributed, std::size_t cap)
    : base_(std::move(base)), distributed_(distributed) {
    base_.validate();
    name_ = "hypersystem(" + base_.name + ")";
    setwise_mul_ = doubly_distributive(base_);

    // Closure of the singletons under setwise hyperaddition, in worklist
    // order; decompositions record one generator list per element.
    for (Elem a = 0; a < base_.size(); ++a)
        intern(SubsetVal::singleton(a), {a});
    zero_ = singleton_elem(base_.zero);
    one_ = singleton_elem(base_.one);
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (elems_.size() > cap) throw ResourceError("hypersystem closure exceeded cap");
            SubsetVal s = base_.add_sets(elems_[i], elems_[j]);
            std::vector<Elem> dec = decomp_[i];
            dec.insert(dec.end(), decomp_[j].begin(), decomp_[j].end());
            intern(s, std::move(dec));
        }
    }
    universe_.resize(elems_.size());
    for (std::size_t i = 0; i < universe_.size(); ++i) universe_[i] = static_cast<Elem>(i);
}

Elem HypersystemCarrier::intern(const SubsetVal& s, std::vector<Elem> decomp) {
    auto it = index_.find(s);
    if (it != index_.end()) return it->second;
    Elem id = static_cast<Elem>(elems_.size());
    elems_.push_back(s);
    decomp_.push_back(std::move(decomp));
    index_.emplace(s, id);
    return id;
}

Elem HypersystemCarrier::elem_for(const SubsetVal& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        throw std::domain_error("hypersystem: set " + subset_label(base_, s) +
                                " is not in the generated submonoid");
    return it->second;
}

Elem HypersystemCarrier::singleton_elem(Elem base_elem) const {
    return elem_for(SubsetVal::singleton(base_elem));
}

Elem HypersystemCarrier::add(Elem a, Elem b) {
    SubsetVal s = base_.add_sets(elems_[a], elems_[b]);
    std::vector<Elem> dec = decomp_[a];
    dec.insert(dec.end(), decomp_[b].begin(), decomp_[b].end());
    return intern(s, std::move(dec));
}

Elem HypersystemCarrier::neg(Elem a) {
    std::vector<Elem> dec;
    for (Elem g : decomp_[a]) dec.push_back(base_.neg[g]);
    return intern(base_.neg_set(elems_[a]), std::move(dec));
}

bool HypersystemCarrier::tangible(Elem a) {
    return elems_[a].is_singleton() && elems_[a].front() != base_.zero;
}

std::pair<SubsetVal, bool> HypersystemCarrier::setwise_product(Elem a, Elem b) const {
    SubsetVal s = base_.mul_sets(elems_[a], elems_[b]);
    return {s, index_.count(s) > 0};
}

Elem HypersystemCarrier::distributed_product(Elem a, Elem b) {
    const auto& ga = decomp_[a];
    const auto& gb = decomp_[b];
    Elem acc = -1;
    for (Elem x : ga)
        for (Elem y : gb) {
            Elem p = intern(SubsetVal::singleton(base_.mul[x][y]), {base_.mul[x][y]});
            acc = acc < 0 ? p : add(acc, p);
        }
    return acc;
}

std::optional<Elem> HypersystemCarrier::mul(Elem a, Elem b) {
    if (setwise_mul_) {
        auto [s, ok] = setwise_product(a, b);
        if (!ok) throw std::domain_error("hypersystem: setwise product left the carrier");
        std::vector<Elem> dec;
        for (Elem x : decomp_[a])
            for (Elem y : decomp_[b]) dec.push_back(base_.mul[x][y]);
        return intern(s, std::move(dec));
    }
    if (distributed_) return distributed_product(a, b);
    // partial: tangible (or zero) action only
    if (elems_[a].is_singleton()) {
        Elem x = elems_[a].front();
        std::vector<Elem> members, dec;
        for (Elem y : elems_[b]) members.push_back(base_.mul[x][y]);
        for (Elem y : decomp_[b]) dec.push_back(base_.mul[x][y]);
        return intern(SubsetVal(std::move(members)), std::move(dec));
    }
    if (elems_[b].is_singleton()) {
        Elem y = elems_[b].front();
        std::vector<Elem> members, dec;
        for (Elem x : elems_[a]) members.push_back(base_.mul[x][y]);
        for (Elem x : decomp_[a]) dec.push_back(base_.mul[x][y]);
        return intern(SubsetVal(std::move(members)), std::move(dec));
    }
    return std::nullopt;
}

std::string HypersystemCarrier::label(Elem a) const {
    return subset_label(base_, elems_[a]);
}

std::optional<Elem> HypersystemCarrier::parse_label(const std::string& s) {
    for (std::size_t i = 0; i < elems_.size(); ++i)
        if (label(static_cast<Elem>(i)) == s) return static_cast<Elem>(i);
    return std::nullopt;
}

} // namespace hk
