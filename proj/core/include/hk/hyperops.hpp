#pragma once

#include "hk/closure.hpp"
#include "hk/report.hpp"
#include "hk/table.hpp"

namespace hk {

/// Axiom names used in hyperstructure reports (stable, used by the catalog).
namespace axiom {
inline constexpr const char* kAssoc = "add-associative";
inline constexpr const char* kNeutral = "zero-neutral";
inline constexpr const char* kUniqueNeg = "unique-hypernegatives";
inline constexpr const char* kReversible = "reversibility";
inline constexpr const char* kMulMonoid = "mul-monoid";
inline constexpr const char* kMulComm = "mul-commutative";
inline constexpr const char* kAbsorbing = "zero-absorbing";
inline constexpr const char* kSingleDist = "single-distributivity";
inline constexpr const char* kDoubleDist = "double-distributivity";
inline constexpr const char* kHyperfield = "hyperfield";
inline constexpr const char* kRevEquivRev = "reversibility-direct";
inline constexpr const char* kRevEquivMorph = "negation-additive-morphism";
inline constexpr const char* kRevEquivAgree = "rev1-agreement";
inline constexpr const char* kRegular = "regular-hypergroup";
} // namespace axiom

/// Def. of a hypergroup: set-associativity, neutral zero, unique
/// hypernegatives, reversibility.  Failures are report entries with the
/// first witness in id-lexicographic scan order.
VerificationReport check_hypergroup(const FiniteHyperTable& t);

/// Hypergroup checks plus monoid multiplication, absorbing zero, single
/// distributivity (sums of length 2 and 3), and the hyperfield flag.
VerificationReport check_hyperring(const FiniteHyperTable& t);

AxiomResult check_double_distributivity(const FiniteHyperTable& t);

/// Both sides of the equivalence between reversibility and S -> -S being an
/// additive morphism, with agreement of the two verdicts.
VerificationReport check_reversibility_equivalence(const FiniteHyperTable& t);

/// Quotient hyperring R/G of a commutative ring table by a multiplicative
/// subgroup of invertible elements (Krasner's construction).
FiniteHyperTable quotient_hyperring(const FiniteHyperTable& ring,
                                    const std::vector<Elem>& subgroup);

/// Pass iff every S in the generated submonoid containing some a and -a also
/// contains 0.
AxiomResult check_regular_hypergroup(const FiniteHyperTable& t,
                                     std::size_t cap = kDefaultClosureCap);

/// The ring of integers mod m as a single-valued hyper table (helper for
/// quotient fixtures).
FiniteHyperTable ring_mod(int m);

} // namespace hk
