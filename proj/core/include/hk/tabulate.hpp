#pragma once

#include "hk/carrier.hpp"
#include "hk/table.hpp"

namespace hk {

/// Writes a carrier window out as a finite system table: total addition
/// (the window must be closed under it), partial multiplication where
/// products stay in the window, tangible flags, and the surpassing relation
/// tabulated as explicit pairs.  Out-of-window sums raise a domain error
/// naming the escaping pair, never a truncated table.
FiniteSystemTable tabulate_window(Carrier& c, const std::vector<Elem>& win,
                                  const std::string& name);

} // namespace hk
