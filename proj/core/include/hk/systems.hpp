#pragma once

#include "hk/carrier.hpp"
#include "hk/report.hpp"
#include "hk/table.hpp"

#include <functional>
#include <optional>

namespace hk {

namespace law {
inline constexpr const char* kNegInvolution = "neg-involution";
inline constexpr const char* kNegAdditive = "neg-additive-morphism";
inline constexpr const char* kNegAction = "neg-action-compatible";
inline constexpr const char* kGeneration = "tzero-generates";
inline constexpr const char* kTangibleQuasi = "tzero-meets-quasizeros-only-at-zero";
inline constexpr const char* kReflexive = "preorder-reflexive";
inline constexpr const char* kTransitive = "preorder-transitive";
inline constexpr const char* kModuleAdd = "module-relation-additive";
inline constexpr const char* kModuleAct = "module-relation-action";
inline constexpr const char* kZeroQuasi = "zero-below-quasizeros";
inline constexpr const char* kNegMonotone = "neg-monotone";
inline constexpr const char* kTangibleEq = "tangible-restriction-is-equality";
inline constexpr const char* kStrong = "strong-surpassing";
inline constexpr const char* kSystemUnique = "tzero-uniquely-negated-over-null";
} // namespace law

/// Classification flags of a triple, each with a witness on the negative
/// side.  `kind` reports mixed-witness when the first/second dichotomy is
/// not exhaustive on the window.
struct TripleProfile {
    enum class Kind { First, Second, MixedWitness };
    Kind kind = Kind::First;
    std::string kind_witness;
    bool bipotent = false;
    bool strongly_bipotent = false;
    bool metatangible = false;
    bool shallow = false;
    bool circ_idempotent = false;
    bool geometric = false;
    bool strongly_geometric = false;
    bool regular = false;  // (-)-regular
    bool uniquely_negated = false;
    bool cancellative = false;
    std::map<std::string, std::string> witnesses;
    std::optional<Elem> e;        // 1 (-) 1
    std::optional<Elem> e_prime;  // e + 1
    std::optional<int> height_bound;
    std::vector<std::string> height_unreached;

    std::string kind_name() const {
        switch (kind) {
            case Kind::First: return "first";
            case Kind::Second: return "second";
            case Kind::MixedWitness: return "mixed-witness";
        }
        return "?";
    }
    json to_json(const Carrier& c) const;
};

/// Balance relation context: nabla_I over a T-submodule I containing the
/// quasi-zeros.  Defaults to I = A_Null of the carrier's surpassing relation.
struct BalanceContext {
    Carrier* carrier = nullptr;
    std::function<bool(Elem)> in_I;
    std::string ideal_name;

    static BalanceContext null_of(Carrier& c) {
        return {&c, [&c](Elem b) { return c.null(b); }, "null"};
    }
    static BalanceContext ideal(Carrier& c, std::function<bool(Elem)> pred, std::string name) {
        return {&c, std::move(pred), std::move(name)};
    }
};

/// { b (-) b : b in window }, canonical order, deduplicated.
std::vector<Elem> quasi_zeros(Carrier& c, const std::vector<Elem>& win);

/// Negation-map laws, generation of A by T0, and T0 meeting the quasi-zeros
/// only at zero.
VerificationReport check_triple(Carrier& c, const std::vector<Elem>& win);

/// b1 preceq b2 under the carrier's native relation.
bool surpasses(Carrier& c, Elem b1, Elem b2);
/// b1 preceq_I b2: b2 = b1 + x for some x of I inside the candidate set.
bool surpasses_ideal(Carrier& c, const std::vector<Elem>& candidates,
                     const std::function<bool(Elem)>& in_I, Elem b1, Elem b2);

/// Pre-order laws, the surpassing axioms, the strong variant and the system
/// condition, all on the window.
VerificationReport check_surpassing_axioms(Carrier& c, const std::vector<Elem>& win);

std::vector<Elem> null_set(Carrier& c, const std::vector<Elem>& win);

bool balances(const BalanceContext& ctx, Elem b1, Elem b2);

/// Minimal t with c a sum of t tangibles (0 has height 0); nullopt when c is
/// not reachable within the cap.
std::optional<int> height(Carrier& c, const std::vector<Elem>& win, Elem x,
                          int cap = -1);

TripleProfile classify(Carrier& c, const std::vector<Elem>& win);

bool is_bipotent(Carrier& c, const std::vector<Elem>& win, std::string* witness = nullptr);
bool is_cancellative(Carrier& c, const std::vector<Elem>& win, std::string* witness = nullptr);
bool uniquely_negated(Carrier& c, const std::vector<Elem>& win, std::string* witness = nullptr);

/// Uniform presentation b = m b_T (m != 2) or b = b_T^circ (m = 2) in a
/// bipotent cancellative window.  Throws std::domain_error when the window
/// fails those hypotheses or b has no presentation within the height cap.
struct UniformPresentation {
    int m = 1;
    Elem tangible_part = 0;
    bool circ_form = false;  // m == 2, b = tangible_part (-) tangible_part
};
UniformPresentation uniform_presentation(Carrier& c, const std::vector<Elem>& win, Elem b);

/// The section 2.5 pre-order: c <= c2 iff c + d = c2 or (-)c + d = c2 for
/// some d scanned over the window.
bool preorder_leq(Carrier& c, const std::vector<Elem>& win, Elem x, Elem y);

/// Extracts the (strongly) T-irreducible tangibles, spans their sub-semigroup
/// and returns the window of the resulting sub-triple plus its tangible set.
struct IrreducibleCore {
    std::vector<Elem> tangibles;
    std::vector<Elem> elements;
};
IrreducibleCore irreducible_core(Carrier& c, const std::vector<Elem>& win, bool strong = false);

/// Dress fuzzy-ring axioms (1)-(4) plus the coherence condition.  K0 must be
/// a proper ideal; a K0 containing the unit is rejected up front.  The
/// predicate form decides K0 membership and invertibility intensionally
/// (needed on symbolic carriers where products leave the window); the list
/// form scans the window for both.
VerificationReport check_fuzzy_ring(Carrier& c, const std::vector<Elem>& win, Elem eps,
                                    const std::function<bool(Elem)>& in_k0,
                                    const std::function<bool(Elem)>& is_unit);
VerificationReport check_fuzzy_ring(Carrier& c, const std::vector<Elem>& win, Elem eps,
                                    const std::vector<Elem>& k0);

/// Multiplication induced by a preunit u on a T-bimodule table, extending the
/// tangible action to a full semiring product.  The preunit axioms are
/// checked up front (domain error naming the violated clause); the result is
/// verified associative, doubly distributive and unital.
FiniteSystemTable preunit_induced_mul(const FiniteSystemTable& t, Elem u);

} // namespace hk
