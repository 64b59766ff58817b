#pragma once

#include "hk/carrier.hpp"
#include "hk/report.hpp"
#include "hk/table.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace hk {

/// A named structure with frozen expected verdicts.  The expected map keys
/// are "<suite>:<axiom>" and every catalog entry must re-derive its own
/// expectations (the self-consistency gate run by the acceptance suite).
struct CatalogEntry {
    enum class Kind { Hyper, System, Symbolic };

    std::string name;
    std::string summary;
    Kind kind = Kind::Symbolic;
    std::function<FiniteHyperTable()> hyper;
    std::function<FiniteSystemTable()> system;
    std::function<std::shared_ptr<Carrier>()> carrier;  // always present
    std::map<std::string, std::string> expected;

    std::string kind_name() const {
        switch (kind) {
            case Kind::Hyper: return "hyper";
            case Kind::System: return "system";
            case Kind::Symbolic: return "symbolic";
        }
        return "?";
    }
};

/// Stable-order catalog.  Parameterized entries (fp-mod-g(p,d), layered-n(m))
/// are materialized on lookup.
const std::vector<CatalogEntry>& catalog_list();
std::optional<CatalogEntry> catalog_find(const std::string& name);

/// Runs the requested suite over a catalog target or an HSF file path.
/// Exit codes: 0 verdicts match (or all pass for files), 1 mismatch,
/// 2 unknown target, 3 resource exhaustion.
struct VerifyOutcome {
    int exit_code = 0;
    json report;
};
VerifyOutcome run_verify(const std::string& target, const std::string& suite);

/// Observed verdict map of an entry (the same keys as `expected`).
std::map<std::string, std::string> observe_verdicts(const CatalogEntry& e,
                                                    const std::string& suite);

/// The truncated-naturals semiring table: sums and products clipped at m.
FiniteSystemTable truncate_naturals(int m);

/// Subgroup of F_p^* of order d (d must divide p-1), least-generator first.
std::vector<Elem> fp_subgroup(int p, int d);

} // namespace hk
