#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hk {

using json = nlohmann::ordered_json;

/// Outcome of one axiom or law instance.  A failed axiom carries the first
/// witness tuple found under the module's canonical scan order, which makes
/// reports byte-stable across runs.
struct AxiomResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> witness;  // element labels, empty when pass
    std::string note;                  // free-form detail (checked bound, etc.)

    static AxiomResult ok(std::string n, std::string note = "") {
        return {std::move(n), true, {}, std::move(note)};
    }
    static AxiomResult fail(std::string n, std::vector<std::string> w, std::string note = "") {
        return {std::move(n), false, std::move(w), std::move(note)};
    }
};

/// Structured outcome of an axiom suite.
struct VerificationReport {
    std::string structure;
    std::vector<AxiomResult> axioms;

    void add(AxiomResult r) { axioms.push_back(std::move(r)); }
    bool all_pass() const {
        for (const auto& a : axioms)
            if (!a.pass) return false;
        return true;
    }
    const AxiomResult* find(const std::string& name) const {
        for (const auto& a : axioms)
            if (a.name == name) return &a;
        return nullptr;
    }
    bool passed(const std::string& name) const {
        const AxiomResult* a = find(name);
        return a && a->pass;
    }

    json to_json() const;
    std::string to_string() const;  // one line per axiom, for terminals
};

struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct ValidationError : std::runtime_error {
    ValidationError(const std::string& axiom, const std::string& detail)
        : std::runtime_error("validation: " + axiom + ": " + detail), axiom_name(axiom) {}
    std::string axiom_name;
};

} // namespace hk
