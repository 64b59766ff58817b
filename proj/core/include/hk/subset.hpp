#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hk {

/// Identifier of a carrier element: a dense index 0..n-1 within one carrier.
/// Display labels live on the owning structure.
using Elem = int;

/// Canonical set of element identifiers: strictly increasing, no duplicates.
/// This is the value type of multivalued addition and of hypersystem elements.
class SubsetVal {
public:
    SubsetVal() = default;
    SubsetVal(std::initializer_list<Elem> xs) : members_(xs) { canonicalize(); }
    explicit SubsetVal(std::vector<Elem> xs) : members_(std::move(xs)) { canonicalize(); }

    static SubsetVal singleton(Elem x) { return SubsetVal{x}; }

    const std::vector<Elem>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool is_singleton() const { return members_.size() == 1; }
    Elem front() const { return members_.front(); }

    bool contains(Elem x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }
    bool subset_of(const SubsetVal& other) const {
        return std::includes(other.members_.begin(), other.members_.end(),
                             members_.begin(), members_.end());
    }

    SubsetVal union_with(const SubsetVal& other) const {
        std::vector<Elem> out;
        out.reserve(members_.size() + other.members_.size());
        std::set_union(members_.begin(), members_.end(),
                       other.members_.begin(), other.members_.end(),
                       std::back_inserter(out));
        SubsetVal r;
        r.members_ = std::move(out);
        return r;
    }

    void insert(Elem x) {
        auto it = std::lower_bound(members_.begin(), members_.end(), x);
        if (it == members_.end() || *it != x) members_.insert(it, x);
    }

    friend bool operator==(const SubsetVal&, const SubsetVal&) = default;
    friend auto operator<=>(const SubsetVal& a, const SubsetVal& b) {
        return a.members_ <=> b.members_;
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

private:
    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }
    std::vector<Elem> members_;
};

/// Sorts and deduplicates `raw`; every id must lie in [0, carrier_size).
/// Idempotent.  Foreign ids raise std::domain_error.
inline SubsetVal canonical_subset(const std::vector<Elem>& raw, std::size_t carrier_size) {
    for (Elem x : raw)
        if (x < 0 || static_cast<std::size_t>(x) >= carrier_size)
            throw std::domain_error("canonical_subset: element id " + std::to_string(x) +
                                    " outside carrier of size " + std::to_string(carrier_size));
    return SubsetVal(raw);
}

} // namespace hk

template <>
struct std::hash<hk::SubsetVal> {
    std::size_t operator()(const hk::SubsetVal& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (int x : s.members()) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};
