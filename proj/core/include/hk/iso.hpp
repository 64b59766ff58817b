#pragma once

#include "hk/carrier.hpp"

#include <map>
#include <optional>

namespace hk {

/// Exhaustive search for a system isomorphism between two finite windows:
/// a bijection preserving zero, tangibility, addition, negation, the
/// surpassing relation, and multiplication where both sides define it.
/// Tangible images determine the rest (sums of tangibles span the window),
/// so the search backtracks over tangible assignments only.
std::optional<std::map<Elem, Elem>> find_isomorphism(Carrier& a,
                                                     const std::vector<Elem>& wa,
                                                     Carrier& b,
                                                     const std::vector<Elem>& wb);

} // namespace hk
