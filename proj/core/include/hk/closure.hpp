#pragma once

#include "hk/report.hpp"
#include "hk/subset.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace hk {

inline constexpr std::size_t kDefaultClosureCap = std::size_t(1) << 20;

/// Overridden by the HK_CLOSURE_CAP environment variable when set.
std::size_t closure_cap_from_env();

struct ClosureOverflow : ResourceError {
    ClosureOverflow(std::size_t cap, std::vector<SubsetVal> partial)
        : ResourceError("closure exceeded cap of " + std::to_string(cap) + " subsets"),
          partial_closure(std::move(partial)) {}
    std::vector<SubsetVal> partial_closure;
};

/// Least collection containing `seed` and closed under `step`, by worklist
/// iteration.  The result order is deterministic: seeds in input order, then
/// new values in order of first derivation (pairs scanned (i,j) with j<=i).
/// Monotone in the seed and idempotent.  Throws ClosureOverflow past `cap`.
std::vector<SubsetVal> closure_under(
    const std::vector<SubsetVal>& seed,
    const std::function<SubsetVal(const SubsetVal&, const SubsetVal&)>& step,
    std::size_t cap = kDefaultClosureCap);

} // namespace hk
