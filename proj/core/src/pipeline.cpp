#include "hk/pipeline.hpp"

#include "hk/bridge.hpp"
#include "hk/catalog.hpp"
#include "hk/hsf.hpp"
#include "hk/hyperops.hpp"
#include "hk/hypersystem.hpp"

#include <fstream>

namespace hk {
namespace {

BalanceContext make_context(HypersystemCarrier& c, const std::string& ideal) {
    if (ideal.empty() || ideal == "null") return BalanceContext::null_of(c);
    const std::string prefix = "null+size>=";
    if (ideal.rfind(prefix, 0) == 0) {
        int k = std::stoi(ideal.substr(prefix.size()));
        return BalanceContext::ideal(
            c,
            [&c, k](Elem b) {
                return c.null(b) || static_cast<int>(c.set_of(b).size()) >= k;
            },
            ideal);
    }
    throw std::domain_error("pipeline: unknown ideal spec '" + ideal + "'");
}

bool tables_equal(const FiniteHyperTable& a, const FiniteHyperTable& b) {
    if (a.size() != b.size()) return false;
    // compare up to the label correspondence, either direct or through the
    // singleton identification "{x}" -> "x"
    auto strip = [](const std::string& s) {
        if (s.size() >= 2 && s.front() == '{' && s.back() == '}')
            return s.substr(1, s.size() - 2);
        return s;
    };
    std::vector<int> to_b(a.size(), -1);
    for (int i = 0; i < a.size(); ++i) {
        auto j = b.find_label(strip(a.labels[i]));
        if (!j) return false;
        to_b[i] = *j;
    }
    if (to_b[a.zero] != b.zero || to_b[a.one] != b.one) return false;
    for (int i = 0; i < a.size(); ++i) {
        if (to_b[a.neg[i]] != b.neg[to_b[i]]) return false;
        for (int j = 0; j < a.size(); ++j) {
            if (to_b[a.mul[i][j]] != b.mul[to_b[i]][to_b[j]]) return false;
            std::vector<Elem> mapped;
            for (Elem x : a.add[i][j]) mapped.push_back(to_b[x]);
            if (SubsetVal(mapped) != b.add[to_b[i]][to_b[j]]) return false;
        }
    }
    return true;
}

} // namespace

PipelineResult run_pipeline(const std::filesystem::path& script,
                            const std::filesystem::path& workdir) {
    PipelineResult out;
    out.report["script"] = script.string();
    out.report["steps"] = json::array();
    json doc;
    {
        std::ifstream in(script);
        if (!in) {
            out.report["error"] = "cannot open " + script.string();
            out.exit_code = 2;
            return out;
        }
        try {
            doc = json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            out.report["error"] = e.what();
            out.exit_code = 2;
            return out;
        }
    }
    if (!doc.is_object() || !doc.contains("steps") || !doc.at("steps").is_array()) {
        out.report["error"] = "pipeline file must be an object with a \"steps\" array";
        out.exit_code = 2;
        return out;
    }
    std::filesystem::create_directories(workdir);

    std::optional<FiniteHyperTable> table;
    std::unique_ptr<HypersystemCarrier> system;
    int index = -1;
    try {
        for (const auto& step : doc.at("steps")) {
            ++index;
            std::string op = step.at("op").get<std::string>();
            json entry;
            entry["index"] = index;
            entry["op"] = op;
            if (op == "source") {
                if (step.contains("name")) {
                    auto e = catalog_find(step.at("name").get<std::string>());
                    if (!e || e->kind != CatalogEntry::Kind::Hyper)
                        throw std::domain_error("source: unknown hyper catalog entry");
                    table = e->hyper();
                } else {
                    Structure s = parse_structure(step.at("path").get<std::string>());
                    table = std::get<FiniteHyperTable>(s);
                }
                system.reset();
            } else if (op == "quotient") {
                int p = step.at("p").get<int>();
                int d = step.at("subgroup-order").get<int>();
                table = quotient_hyperring(ring_mod(p), fp_subgroup(p, d));
                system.reset();
            } else if (op == "to-system") {
                if (!table) throw std::domain_error("to-system: no current table");
                system = hypersystem_of(*table, false);
                entry["carrier-size"] = system->window().size();
            } else if (op == "profile") {
                if (!system) throw std::domain_error("profile: no current system");
                std::string ideal =
                    step.contains("ideal") ? step.at("ideal").get<std::string>() : "null";
                BalanceContext ctx = make_context(*system, ideal);
                EliminationProfile p = elimination_profile(*system, system->window(), ctx);
                entry["ideal"] = ideal;
                entry["profile"] = p.to_json();
            } else if (op == "recover") {
                if (!system) throw std::domain_error("recover: no current system");
                BalanceContext ctx = BalanceContext::null_of(*system);
                table = recover_hyperring(*system, system->window(), ctx);
            } else if (op == "diff") {
                if (!table) throw std::domain_error("diff: no current table");
                auto e = catalog_find(step.at("name").get<std::string>());
                if (!e || e->kind != CatalogEntry::Kind::Hyper)
                    throw std::domain_error("diff: unknown hyper catalog entry");
                FiniteHyperTable other = e->hyper();
                bool equal = tables_equal(*table, other);
                entry["equal"] = equal;
                if (!equal) {
                    out.report["steps"].push_back(std::move(entry));
                    out.report["error"] = "diff mismatch at step " + std::to_string(index);
                    out.exit_code = 1;
                    return out;
                }
            } else if (op == "write") {
                if (!table) throw std::domain_error("write: no current table");
                auto path = workdir / step.at("out").get<std::string>();
                write_structure(Structure(*table), path);
                entry["out"] = path.string();
            } else {
                throw std::domain_error("unknown op '" + op + "'");
            }
            out.report["steps"].push_back(std::move(entry));
        }
    } catch (const ResourceError& e) {
        out.report["error"] = std::string(e.what()) + " at step " + std::to_string(index);
        out.exit_code = 3;
        return out;
    } catch (const std::exception& e) {
        out.report["error"] = std::string(e.what()) + " at step " + std::to_string(index);
        out.exit_code = 2;
        return out;
    }
    return out;
}

} // namespace hk
