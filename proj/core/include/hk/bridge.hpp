#pragma once

#include "hk/hypersystem.hpp"
#include "hk/systems.hpp"

#include <memory>

namespace hk {

/// The three elimination axioms plus faithfulness, with first-failure
/// witnesses under the canonical carrier order.
struct EliminationProfile {
    bool tangibly_balanced = false;
    bool balance_elimination = false;
    bool nabla_inversion_left = false;
    bool nabla_inversion_right = false;
    bool faithfully_balanced = false;
    std::map<std::string, std::vector<std::string>> witnesses;

    bool nabla_inversion() const { return nabla_inversion_left && nabla_inversion_right; }
    json to_json() const;
};

/// Phi of the correspondence: the hypersystem of a hyperring.  The table must
/// pass check_hyperring; the closure is capped.
std::unique_ptr<HypersystemCarrier> hypersystem_of(const FiniteHyperTable& t,
                                                   bool distributed = false,
                                                   std::size_t cap = kDefaultClosureCap);

EliminationProfile elimination_profile(Carrier& c, const std::vector<Elem>& win,
                                       const BalanceContext& ctx);

/// boxplus-nabla: { a in T0 : a balances the sum of the operands }.
std::vector<Elem> boxplus_nabla(Carrier& c, const std::vector<Elem>& win,
                                const BalanceContext& ctx, const std::vector<Elem>& operands);

/// boxplus over the surpassing relation (or the I-variant when ctx is given):
/// { a in T : a preceq sum of operands }.
std::vector<Elem> boxplus_order(Carrier& c, const std::vector<Elem>& win,
                                const std::vector<Elem>& operands,
                                const BalanceContext* ideal_ctx = nullptr);

struct RecoverRefused : std::runtime_error {
    RecoverRefused(std::string what, EliminationProfile p)
        : std::runtime_error(std::move(what)), profile(std::move(p)) {}
    EliminationProfile profile;
};

/// Psi of the correspondence: T0 with boxplus-nabla as hyperaddition and the
/// inherited product.  Refuses (with the profile) unless the system is
/// tangibly balanced with balance elimination and nabla-inversion; products
/// leaving T0 are reported as errors.
FiniteHyperTable recover_hyperring(Carrier& c, const std::vector<Elem>& win,
                                   const BalanceContext& ctx);

/// The hyperaddition part of Psi without the totality requirements on the
/// product: labels, negation and the boxplus-nabla table on T0.
struct RecoveredAddition {
    std::vector<Elem> t0;                       // carrier handles
    std::vector<std::vector<std::vector<int>>> add;  // indices into t0
    std::vector<int> neg;                       // indices into t0
};
RecoveredAddition recover_hyperaddition(Carrier& c, const std::vector<Elem>& win,
                                        const BalanceContext& ctx);

/// Assumption checks for the boxplus over preceq_I, and on success the
/// rebuilt hypergroup is itself checked and compared against boxplus-nabla.
VerificationReport check_assumption_hyper1(Carrier& c, const std::vector<Elem>& win,
                                           const BalanceContext& ctx);

/// Runs Psi after Phi and asserts table equality up to the singleton
/// identification; also reports the faithfulness of Phi(H).
VerificationReport retraction_suite(const FiniteHyperTable& t,
                                    std::size_t cap = kDefaultClosureCap);

} // namespace hk
