#pragma once

#include "hk/carrier.hpp"
#include "hk/families.hpp"
#include "hk/report.hpp"

#include <vector>

namespace hk {

/// Alternating map from m-tuples over {0..n-1} into a carrier, stored
/// densely on all n^m tuples.  Bases are the tuples with tangible value,
/// deduplicated as sets.
struct GPMap {
    int n = 0;
    int m = 0;
    std::vector<Elem> values;  // size n^m, index = sum e_k * n^k (e_1 slowest)

    std::size_t index(const std::vector<int>& tuple) const;
    Elem at(const std::vector<int>& tuple) const { return values[index(tuple)]; }
    void set(const std::vector<int>& tuple, Elem v) { values[index(tuple)] = v; }
    std::vector<std::vector<int>> all_tuples() const;
};

struct MatroidReport {
    VerificationReport axioms;
    std::vector<std::vector<int>> bases;

    json to_json() const;
};

/// Leibniz expansion with the system negation applied per transposition
/// parity.  The carrier product must be total; arity is capped at 8.
Elem signed_det(Carrier& c, const std::vector<Elem>& grid, int m);

/// Grassmann-Pluecker map of the maximal minors of an m x n grid.  At least
/// one maximal minor must be tangible (domain error otherwise).
GPMap minors_gp_map(Carrier& c, const std::vector<Elem>& grid, int m, int n);

/// Verifies (i) a tangible value exists, (ii) repeated-index tuples are
/// null, (iii) alternation, (iv) the Grassmann-Pluecker relations; collects
/// the bases.  The quantification is capped at n <= 8, m <= 4.
MatroidReport check_gp(Carrier& c, const GPMap& b);

/// Exchange property over the section 2.5 pre-order, applicable to bipotent
/// cancellative windows (refused otherwise): for every pair of tuples whose
/// value product is tangible there is an index i satisfying the exchange
/// inequality.  Records the first failure.
AxiomResult check_exchange(Carrier& c, const std::vector<Elem>& win, const GPMap& b);

/// Exponent of 2 in a rational (numerator minus denominator valuation).
int dyadic_valuation(const Rational& q);

/// Chirotope of a rational m x n matrix over a sign-like carrier: the exact
/// rational maximal minors mapped through their sign onto the given carrier
/// elements.  (The sign pattern of the matrix alone cannot determine these.)
GPMap rational_chirotope(Elem pos, Elem neg_elem, Elem zero_elem,
                         const std::vector<Rational>& grid, int m, int n);

/// Supertropical minors of a rational matrix: entries are imaged to tangible
/// dyadic valuations (negated, max convention) and the minors are computed
/// inside the supertropical carrier, so tied leading terms come out ghost.
GPMap valuation_minors_map(SupertropicalCarrier& st, const std::vector<Rational>& grid,
                           int m, int n);

} // namespace hk
