#include "hk/hsf.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hk {
namespace {

[[noreturn]] void syntax_error(const std::string& origin, const std::string& text,
                               std::size_t byte, const std::string& what) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    throw HsfError(origin + ":" + std::to_string(line) + ": " + what);
}

const std::set<std::string> kHyperKeys = {"kind", "name", "carrier", "zero", "one",
                                          "neg", "add", "mul"};
const std::set<std::string> kSystemKeys = {"kind", "name", "carrier", "zero", "one", "neg",
                                           "add", "mul", "tangible", "surpass"};

Elem need_label(const std::vector<std::string>& labels, const std::string& s,
                const std::string& where) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == s) return static_cast<Elem>(i);
    throw HsfError("unknown label '" + s + "' in " + where);
}

std::pair<std::string, std::string> split_pair(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos)
        throw HsfError("pair key '" + key + "' is not of the form \"a,b\"");
    return {key.substr(0, comma), key.substr(comma + 1)};
}

SurpassSpec parse_surpass(const json& j, const std::vector<std::string>& labels) {
    if (!j.is_object() || !j.contains("variant"))
        throw HsfError("surpass: expected object with \"variant\"");
    std::string v = j.at("variant").get<std::string>();
    if (v == "circ") return SurpassSpec::circ();
    if (v == "inclusion") return SurpassSpec::inclusion();
    if (v == "ideal") {
        std::vector<Elem> m;
        for (const auto& s : j.at("members"))
            m.push_back(need_label(labels, s.get<std::string>(), "surpass.members"));
        return SurpassSpec::ideal(std::move(m));
    }
    if (v == "explicit") {
        std::vector<std::pair<Elem, Elem>> ps;
        for (const auto& p : j.at("pairs"))
            ps.emplace_back(need_label(labels, p.at(0).get<std::string>(), "surpass.pairs"),
                            need_label(labels, p.at(1).get<std::string>(), "surpass.pairs"));
        return SurpassSpec::explicit_pairs(std::move(ps));
    }
    throw HsfError("surpass: unknown variant '" + v + "'");
}

json surpass_json(const SurpassSpec& s, const std::vector<std::string>& labels) {
    json j;
    j["variant"] = s.variant_name();
    if (s.variant == SurpassSpec::Variant::Ideal) {
        j["members"] = json::array();
        for (Elem m : s.ideal_members) j["members"].push_back(labels[m]);
    } else if (s.variant == SurpassSpec::Variant::Explicit) {
        j["pairs"] = json::array();
        for (auto& [a, b] : s.pairs) j["pairs"].push_back(json::array({labels[a], labels[b]}));
    }
    return j;
}

std::vector<std::string> parse_carrier(const json& j) {
    std::vector<std::string> labels;
    for (const auto& s : j.at("carrier")) {
        std::string lab = s.get<std::string>();
        if (lab.empty() || lab.find(',') != std::string::npos)
            throw HsfError("label '" + lab + "' is empty or contains a comma");
        labels.push_back(lab);
    }
    return labels;
}

FiniteHyperTable parse_hyper(const json& j, const std::string& name) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!kHyperKeys.count(it.key()))
            throw HsfError("unknown key '" + it.key() + "' in hyper structure");
    FiniteHyperTable t;
    t.name = j.contains("name") ? j.at("name").get<std::string>() : name;
    t.labels = parse_carrier(j);
    const int n = t.size();
    t.zero = need_label(t.labels, j.at("zero").get<std::string>(), "zero");
    t.one = need_label(t.labels, j.at("one").get<std::string>(), "one");
    t.neg.assign(n, -1);
    for (auto it = j.at("neg").begin(); it != j.at("neg").end(); ++it)
        t.neg[need_label(t.labels, it.key(), "neg")] =
            need_label(t.labels, it.value().get<std::string>(), "neg");
    for (int i = 0; i < n; ++i)
        if (t.neg[i] < 0) throw HsfError("neg: missing image for '" + t.labels[i] + "'");
    t.add.assign(n, std::vector<SubsetVal>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (auto it = j.at("add").begin(); it != j.at("add").end(); ++it) {
        auto [sa, sb] = split_pair(it.key());
        if (sb < sa)
            throw HsfError("add: pair \"" + it.key() + "\" is not stored with a <= b");
        Elem a = need_label(t.labels, sa, "add");
        Elem b = need_label(t.labels, sb, "add");
        std::vector<Elem> members;
        for (const auto& s : it.value())
            members.push_back(need_label(t.labels, s.get<std::string>(), "add"));
        SubsetVal v(std::move(members));
        t.add[a][b] = v;
        t.add[b][a] = v;  // symmetric completion
        seen[a][b] = seen[b][a] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!seen[a][b])
                throw HsfError("add: missing pair (" + t.labels[a] + "," + t.labels[b] + ")");
    t.mul.assign(n, std::vector<Elem>(n, -1));
    for (auto it = j.at("mul").begin(); it != j.at("mul").end(); ++it) {
        auto [sa, sb] = split_pair(it.key());
        t.mul[need_label(t.labels, sa, "mul")][need_label(t.labels, sb, "mul")] =
            need_label(t.labels, it.value().get<std::string>(), "mul");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.mul[a][b] < 0)
                throw HsfError("mul: missing pair (" + t.labels[a] + "," + t.labels[b] + ")");
    t.validate();
    return t;
}

FiniteSystemTable parse_system(const json& j, const std::string& name) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!kSystemKeys.count(it.key()))
            throw HsfError("unknown key '" + it.key() + "' in system structure");
    FiniteSystemTable t;
    t.name = j.contains("name") ? j.at("name").get<std::string>() : name;
    t.labels = parse_carrier(j);
    const int n = t.size();
    t.zero = need_label(t.labels, j.at("zero").get<std::string>(), "zero");
    if (j.contains("one")) t.one = need_label(t.labels, j.at("one").get<std::string>(), "one");
    t.tangible.assign(n, false);
    if (j.contains("tangible"))
        for (const auto& s : j.at("tangible"))
            t.tangible[need_label(t.labels, s.get<std::string>(), "tangible")] = true;
    t.neg.assign(n, -1);
    for (auto it = j.at("neg").begin(); it != j.at("neg").end(); ++it)
        t.neg[need_label(t.labels, it.key(), "neg")] =
            need_label(t.labels, it.value().get<std::string>(), "neg");
    for (int i = 0; i < n; ++i)
        if (t.neg[i] < 0) throw HsfError("neg: missing image for '" + t.labels[i] + "'");
    t.add.assign(n, std::vector<Elem>(n, -1));
    for (auto it = j.at("add").begin(); it != j.at("add").end(); ++it) {
        auto [sa, sb] = split_pair(it.key());
        if (sb < sa)
            throw HsfError("add: pair \"" + it.key() + "\" is not stored with a <= b");
        Elem a = need_label(t.labels, sa, "add");
        Elem b = need_label(t.labels, sb, "add");
        Elem v = need_label(t.labels, it.value().get<std::string>(), "add");
        t.add[a][b] = t.add[b][a] = v;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (t.add[a][b] < 0)
                throw HsfError("add: missing pair (" + t.labels[a] + "," + t.labels[b] + ")");
    t.mul.assign(n, std::vector<std::optional<Elem>>(n));
    if (j.contains("mul"))
        for (auto it = j.at("mul").begin(); it != j.at("mul").end(); ++it) {
            auto [sa, sb] = split_pair(it.key());
            t.mul[need_label(t.labels, sa, "mul")][need_label(t.labels, sb, "mul")] =
                need_label(t.labels, it.value().get<std::string>(), "mul");
        }
    if (j.contains("surpass")) t.surpass = parse_surpass(j.at("surpass"), t.labels);
    t.validate();
    return t;
}

} // namespace

Structure parse_structure_text(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error(origin, text, e.byte, e.what());
    }
    if (!j.is_object() || !j.contains("kind"))
        throw HsfError(origin + ": top level must be an object with \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    std::string stem = origin;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
        stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos) stem = stem.substr(0, dot);
    if (kind == "hyper") return parse_hyper(j, stem);
    if (kind == "system") return parse_system(j, stem);
    throw HsfError(origin + ": unknown kind '" + kind + "'");
}

Structure parse_structure(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw HsfError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_structure_text(ss.str(), path.string());
}

json to_hsf_json(const FiniteHyperTable& t) {
    json j;
    j["kind"] = "hyper";
    j["name"] = t.name;
    j["carrier"] = t.labels;
    j["zero"] = t.labels[t.zero];
    j["one"] = t.labels[t.one];
    json neg;
    for (int i = 0; i < t.size(); ++i) neg[t.labels[i]] = t.labels[t.neg[i]];
    j["neg"] = std::move(neg);
    json add;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b) {
            if (t.labels[a] > t.labels[b]) continue;
            json v = json::array();
            for (Elem x : t.add[a][b]) v.push_back(t.labels[x]);
            add[t.labels[a] + "," + t.labels[b]] = std::move(v);
        }
    j["add"] = std::move(add);
    json mul;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b)
            mul[t.labels[a] + "," + t.labels[b]] = t.labels[t.mul[a][b]];
    j["mul"] = std::move(mul);
    return j;
}

json to_hsf_json(const FiniteSystemTable& t) {
    json j;
    j["kind"] = "system";
    j["name"] = t.name;
    j["carrier"] = t.labels;
    j["zero"] = t.labels[t.zero];
    if (t.one) j["one"] = t.labels[*t.one];
    json neg;
    for (int i = 0; i < t.size(); ++i) neg[t.labels[i]] = t.labels[t.neg[i]];
    j["neg"] = std::move(neg);
    json add;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b) {
            if (t.labels[a] > t.labels[b]) continue;
            add[t.labels[a] + "," + t.labels[b]] = t.labels[t.add[a][b]];
        }
    j["add"] = std::move(add);
    json mul;
    for (int a = 0; a < t.size(); ++a)
        for (int b = 0; b < t.size(); ++b)
            if (t.mul[a][b]) mul[t.labels[a] + "," + t.labels[b]] = t.labels[*t.mul[a][b]];
    j["mul"] = std::move(mul);
    json tang = json::array();
    for (int i = 0; i < t.size(); ++i)
        if (t.tangible[i]) tang.push_back(t.labels[i]);
    j["tangible"] = std::move(tang);
    j["surpass"] = surpass_json(t.surpass, t.labels);
    return j;
}

std::string serialize_structure(const Structure& s) {
    json j = std::visit([](const auto& t) { return to_hsf_json(t); }, s);
    return j.dump(2) + "\n";
}

void write_structure(const Structure& s, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw HsfError("cannot write " + path.string());
    out << serialize_structure(s);
}

} // namespace hk
