// hk: catalog management, verification drivers, construction pipelines,
// bridge and matroid commands with deterministic report emission.
//
// Exit codes: 0 verdicts match / all passed, 1 mismatch, 2 usage or unknown
// target, 3 resource exhaustion.

#include <CLI11.hpp>

#include "hk/bridge.hpp"
#include "hk/catalog.hpp"
#include "hk/convolution.hpp"
#include "hk/families.hpp"
#include "hk/hsf.hpp"
#include "hk/hyperops.hpp"
#include "hk/hypersystem.hpp"
#include "hk/layered.hpp"
#include "hk/layered_hyper.hpp"
#include "hk/matroid.hpp"
#include "hk/pipeline.hpp"
#include "hk/symmetrize.hpp"
#include "hk/systems.hpp"
#include "hk/table_carrier.hpp"
#include "hk/tabulate.hpp"

#include <fstream>
#include <iostream>

namespace {

using namespace hk;

void emit(const json& report, const std::string& out_path) {
    std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        out << text;
    }
}

FiniteHyperTable load_hyper(const std::string& target) {
    if (auto e = catalog_find(target); e && e->kind == CatalogEntry::Kind::Hyper)
        return e->hyper();
    Structure s = parse_structure(target);
    if (!std::holds_alternative<FiniteHyperTable>(s))
        throw std::domain_error(target + " is not a hyperstructure");
    return std::get<FiniteHyperTable>(s);
}

std::shared_ptr<Carrier> load_carrier(const std::string& target) {
    if (auto e = catalog_find(target)) return e->carrier();
    Structure s = parse_structure(target);
    if (std::holds_alternative<FiniteSystemTable>(s))
        return std::make_shared<TableCarrier>(std::get<FiniteSystemTable>(s));
    return std::shared_ptr<Carrier>(
        hypersystem_of(std::get<FiniteHyperTable>(s), false).release());
}

std::vector<Rational> parse_grades(const std::string& spec) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        out.push_back(Rational::parse(
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::domain_error("empty grade list");
    return out;
}

BalanceContext make_ideal_context(Carrier& c, const std::string& ideal) {
    if (ideal.empty() || ideal == "null") return BalanceContext::null_of(c);
    const std::string prefix = "null+size>=";
    if (ideal.rfind(prefix, 0) == 0) {
        int k = std::stoi(ideal.substr(prefix.size()));
        auto* hs = dynamic_cast<HypersystemCarrier*>(&c);
        if (!hs) throw std::domain_error("ideal '" + ideal + "' needs a hypersystem");
        return BalanceContext::ideal(
            c,
            [hs, k](Elem b) {
                return hs->null(b) || static_cast<int>(hs->set_of(b).size()) >= k;
            },
            ideal);
    }
    throw std::domain_error("unknown ideal spec '" + ideal + "'");
}

json gp_map_json(Carrier& c, const GPMap& b) {
    json j;
    j["n"] = b.n;
    j["m"] = b.m;
    json vals;
    for (const auto& t : b.all_tuples()) {
        std::string key;
        for (std::size_t i = 0; i < t.size(); ++i)
            key += (i ? "," : "") + std::to_string(t[i] + 1);
        vals[key] = c.label(b.at(t));
    }
    j["values"] = std::move(vals);
    return j;
}

GPMap gp_map_from_json(Carrier& c, const json& j) {
    GPMap b;
    b.n = j.at("n").get<int>();
    b.m = j.at("m").get<int>();
    std::size_t total = 1;
    for (int i = 0; i < b.m; ++i) total *= static_cast<std::size_t>(b.n);
    b.values.assign(total, c.zero());
    for (auto it = j.at("values").begin(); it != j.at("values").end(); ++it) {
        std::vector<int> tuple;
        std::string key = it.key();
        std::size_t pos = 0;
        while (pos < key.size()) {
            auto comma = key.find(',', pos);
            tuple.push_back(std::stoi(key.substr(pos, comma - pos)) - 1);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        auto v = c.parse_label(it.value().get<std::string>());
        if (!v) throw std::domain_error("unknown carrier label " + it.value().dump());
        b.set(tuple, *v);
    }
    return b;
}

struct MatrixInput {
    int rows = 0, cols = 0;
    std::vector<std::string> entries;
};

MatrixInput load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j = json::parse(in);
    MatrixInput m;
    for (const auto& row : j.at("rows")) {
        ++m.rows;
        int c = 0;
        for (const auto& cell : row) {
            m.entries.push_back(cell.is_string() ? cell.get<std::string>() : cell.dump());
            ++c;
        }
        if (m.cols == 0) m.cols = c;
        if (c != m.cols) throw std::domain_error("ragged matrix");
    }
    return m;
}

int cmd_catalog() {
    json j = json::array();
    for (const auto& e : catalog_list()) {
        json entry;
        entry["name"] = e.name;
        entry["kind"] = e.kind_name();
        entry["summary"] = e.summary;
        j.push_back(std::move(entry));
    }
    json fp;
    fp["name"] = "fp-mod-g(p,d)";
    fp["kind"] = "hyper";
    fp["summary"] = "quotient of F_p by the subgroup of unit order d (materialized on demand)";
    j.push_back(std::move(fp));
    json ln;
    ln["name"] = "layered-n(m)";
    ln["kind"] = "symbolic";
    ln["summary"] = "truncated-natural layers over rational grades";
    j.push_back(std::move(ln));
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperring and semiring-system verification kit"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "list the built-in structures");

    std::string verify_target, verify_suite = "all", verify_out;
    auto* verify = app.add_subcommand("verify", "run an axiom suite against expectations");
    verify->add_option("target", verify_target, "catalog name or .hsf path")->required();
    verify->add_option("--suite", verify_suite, "axioms|classify|profile|all");
    verify->add_option("--out", verify_out, "write the JSON report here");

    auto* construct = app.add_subcommand("construct", "construction functors");
    construct->require_subcommand(1);
    std::string c_in, c_out, c_grades = "0,1,2,3";
    int c_m = 2, c_n = 2, c_nvars = 1, c_degcap = 4, c_window = 0, c_option = 2;
    std::vector<std::string> c_ins;
    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--in", c_in, "input catalog name or .hsf")->required();
        sub->add_option("--out", c_out, "output .hsf path")->required();
        sub->add_option("--window", c_window, "window variant to tabulate");
    };
    auto* c_sym = construct->add_subcommand("symmetrize", "pairs with the twist product");
    add_io(c_sym);
    auto* c_symb = construct->add_subcommand("symmetrize-bipotent",
                                             "case-split symmetrization of a bipotent base");
    add_io(c_symb);
    auto* c_lay = construct->add_subcommand("layered", "grade-lexicographic layer extension");
    add_io(c_lay);
    c_lay->add_option("--grades", c_grades, "comma separated rational grades");
    auto* c_layh = construct->add_subcommand("layered-hyper",
                                             "hyperfield layers with lower-grade spill");
    add_io(c_layh);
    c_layh->add_option("--grades", c_grades, "comma separated rational grades");
    auto* c_trunc = construct->add_subcommand("truncate", "naturals clipped at m");
    c_trunc->add_option("--m", c_m, "truncation bound")->required();
    c_trunc->add_option("--out", c_out, "output .hsf path")->required();
    auto* c_ds = construct->add_subcommand("direct-sum", "componentwise direct sum");
    c_ds->add_option("--in", c_ins, "two or more inputs")->required();
    c_ds->add_option("--out", c_out, "output .hsf path")->required();
    c_ds->add_option("--option", c_option, "tangible set option 1|2|3");
    c_ds->add_option("--window", c_window, "window variant to tabulate");
    auto* c_poly = construct->add_subcommand("poly", "polynomial convolution system");
    add_io(c_poly);
    c_poly->add_option("--nvars", c_nvars, "number of variables");
    c_poly->add_option("--degcap", c_degcap, "total degree cap");
    auto* c_mat = construct->add_subcommand("matrix", "matrix convolution system");
    add_io(c_mat);
    c_mat->add_option("--n", c_n, "matrix dimension");

    auto* bridge = app.add_subcommand("bridge", "hyperring/system correspondence");
    bridge->require_subcommand(1);
    std::string b_in, b_out, b_ideal = "null";
    auto* b_tosys = bridge->add_subcommand("to-system", "hypersystem of a hyperring");
    b_tosys->add_option("--in", b_in)->required();
    b_tosys->add_option("--out", b_out)->required();
    auto* b_rec = bridge->add_subcommand("recover", "tangible hyperring of a system");
    b_rec->add_option("--in", b_in)->required();
    b_rec->add_option("--out", b_out)->required();
    auto* b_ret = bridge->add_subcommand("retraction", "round-trip report");
    b_ret->add_option("--in", b_in)->required();
    b_ret->add_option("--out", b_out);
    auto* b_prof = bridge->add_subcommand("profile", "elimination profile");
    b_prof->add_option("--in", b_in)->required();
    b_prof->add_option("--ideal", b_ideal, "null | null+size>=K");
    b_prof->add_option("--out", b_out);

    auto* matroid = app.add_subcommand("matroid", "matroids over systems");
    matroid->require_subcommand(1);
    std::string m_matrix, m_carrier = "supertropical", m_map, m_out, m_image = "none";
    auto* m_from = matroid->add_subcommand("from-matrix", "minors map of a matrix");
    m_from->add_option("--matrix", m_matrix, "JSON grid file")->required();
    m_from->add_option("--carrier", m_carrier, "catalog name or .hsf");
    m_from->add_option("--map", m_image, "none | sign | val2 (rational entries)");
    m_from->add_option("--out", m_out)->required();
    auto* m_check = matroid->add_subcommand("check", "Grassmann-Pluecker report");
    m_check->add_option("--map", m_map, "GP map JSON")->required();
    m_check->add_option("--carrier", m_carrier)->required();
    m_check->add_option("--out", m_out);
    auto* m_ex = matroid->add_subcommand("exchange", "exchange property report");
    m_ex->add_option("--map", m_map)->required();
    m_ex->add_option("--carrier", m_carrier)->required();
    m_ex->add_option("--out", m_out);
    auto* m_bases = matroid->add_subcommand("bases", "list the bases");
    m_bases->add_option("--map", m_map)->required();
    m_bases->add_option("--carrier", m_carrier)->required();
    m_bases->add_option("--out", m_out);

    std::string p_script, p_work = "hk-work";
    auto* pipe = app.add_subcommand("pipeline", "run a JSON step file");
    pipe->add_option("script", p_script)->required();
    pipe->add_option("--work", p_work, "artifact directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cat->parsed()) return cmd_catalog();

        if (verify->parsed()) {
            VerifyOutcome v = run_verify(verify_target, verify_suite);
            emit(v.report, verify_out);
            return v.exit_code;
        }

        if (construct->parsed()) {
            CLI::App* sub = construct->get_subcommands().front();
            std::string name = sub->get_name();
            if (name == "truncate") {
                write_structure(Structure(truncate_naturals(c_m)), c_out);
                return 0;
            }
            std::shared_ptr<Carrier> out_carrier;
            if (name == "symmetrize" || name == "symmetrize-bipotent") {
                auto base = load_carrier(c_in);
                out_carrier = std::make_shared<SymmetrizedCarrier>(
                    base, name == "symmetrize-bipotent");
            } else if (name == "layered") {
                auto layers = load_carrier(c_in);
                out_carrier = std::make_shared<LayeredCarrier>(layers, parse_grades(c_grades));
            } else if (name == "layered-hyper") {
                out_carrier = std::make_shared<LayeredHyperCarrier>(load_hyper(c_in),
                                                                    parse_grades(c_grades));
            } else if (name == "direct-sum") {
                std::vector<std::shared_ptr<Carrier>> parts;
                for (const auto& t : c_ins) parts.push_back(load_carrier(t));
                out_carrier = std::make_shared<DirectSumCarrier>(
                    parts, static_cast<DirectSumOption>(c_option));
            } else if (name == "poly") {
                out_carrier = std::make_shared<PolyCarrier>(load_carrier(c_in), c_nvars,
                                                            c_degcap);
            } else if (name == "matrix") {
                out_carrier = std::make_shared<MatrixCarrier>(load_carrier(c_in), c_n);
            }
            FiniteSystemTable t =
                tabulate_window(*out_carrier, out_carrier->window(c_window), "");
            write_structure(Structure(t), c_out);
            return 0;
        }

        if (bridge->parsed()) {
            CLI::App* sub = bridge->get_subcommands().front();
            std::string name = sub->get_name();
            if (name == "to-system") {
                auto sys = hypersystem_of(load_hyper(b_in), false, closure_cap_from_env());
                FiniteSystemTable t = tabulate_window(*sys, sys->window(), "");
                // inclusion is the native relation of a hypersystem table
                t.surpass = SurpassSpec::inclusion();
                write_structure(Structure(t), b_out);
                return 0;
            }
            if (name == "recover") {
                auto c = load_carrier(b_in);
                BalanceContext ctx = BalanceContext::null_of(*c);
                FiniteHyperTable t = recover_hyperring(*c, c->window(0), ctx);
                write_structure(Structure(t), b_out);
                return 0;
            }
            if (name == "retraction") {
                VerificationReport r =
                    retraction_suite(load_hyper(b_in), closure_cap_from_env());
                emit(r.to_json(), b_out);
                return r.all_pass() ? 0 : 1;
            }
            auto c = load_carrier(b_in);
            BalanceContext ctx = make_ideal_context(*c, b_ideal);
            EliminationProfile p = elimination_profile(*c, c->window(0), ctx);
            json rep;
            rep["structure"] = c->name();
            rep["ideal"] = ctx.ideal_name;
            rep["profile"] = p.to_json();
            emit(rep, b_out);
            return 0;
        }

        if (matroid->parsed()) {
            CLI::App* sub = matroid->get_subcommands().front();
            std::string name = sub->get_name();
            auto carrier = load_carrier(m_carrier);
            if (name == "from-matrix") {
                MatrixInput in = load_matrix(m_matrix);
                GPMap b;
                if (m_image == "sign") {
                    std::vector<Rational> grid;
                    for (auto& s : in.entries) grid.push_back(Rational::parse(s));
                    auto pos = carrier->parse_label("1");
                    auto neg = carrier->parse_label("-1");
                    if (!pos || !neg)
                        throw std::domain_error("--map sign needs a carrier with 1 and -1");
                    b = rational_chirotope(*pos, *neg, carrier->zero(), grid, in.rows,
                                           in.cols);
                } else if (m_image == "val2") {
                    auto st = std::make_shared<SupertropicalCarrier>();
                    std::vector<Rational> grid;
                    for (auto& s : in.entries) grid.push_back(Rational::parse(s));
                    b = valuation_minors_map(*st, grid, in.rows, in.cols);
                    carrier = st;
                } else {
                    std::vector<Elem> grid;
                    for (auto& s : in.entries) {
                        auto v = carrier->parse_label(s);
                        if (!v) throw std::domain_error("unknown carrier label '" + s + "'");
                        grid.push_back(*v);
                    }
                    b = minors_gp_map(*carrier, grid, in.rows, in.cols);
                }
                emit(gp_map_json(*carrier, b), m_out);
                return 0;
            }
            std::ifstream mapin(m_map);
            if (!mapin) throw std::runtime_error("cannot open " + m_map);
            GPMap b = gp_map_from_json(*carrier, json::parse(mapin));
            if (name == "check") {
                MatroidReport rep = check_gp(*carrier, b);
                emit(rep.to_json(), m_out);
                return rep.axioms.all_pass() ? 0 : 1;
            }
            if (name == "exchange") {
                AxiomResult r = check_exchange(*carrier, carrier->window(0), b);
                json rep;
                rep["structure"] = carrier->name();
                rep["exchange"] = r.pass;
                if (!r.witness.empty()) rep["witness"] = r.witness;
                emit(rep, m_out);
                return r.pass ? 0 : 1;
            }
            MatroidReport rep = check_gp(*carrier, b);
            json out;
            out["bases"] = rep.to_json()["bases"];
            emit(out, m_out);
            return 0;
        }

        if (pipe->parsed()) {
            PipelineResult r = run_pipeline(p_script, p_work);
            emit(r.report, "");
            return r.exit_code;
        }
    } catch (const ClosureOverflow& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "resource: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
