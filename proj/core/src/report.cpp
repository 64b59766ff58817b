#include "hk/report.hpp"

#include <sstream>

namespace hk {

json VerificationReport::to_json() const {
    json j;
    j["structure"] = structure;
    j["axioms"] = json::array();
    for (const auto& a : axioms) {
        json e;
        e["name"] = a.name;
        e["pass"] = a.pass;
        e["witness"] = a.witness.empty() ? json(nullptr) : json(a.witness);
        if (!a.note.empty()) e["note"] = a.note;
        j["axioms"].push_back(std::move(e));
    }
    return j;
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    os << structure << "\n";
    for (const auto& a : axioms) {
        os << "  " << (a.pass ? "pass" : "FAIL") << "  " << a.name;
        if (!a.witness.empty()) {
            os << "  witness=(";
            for (std::size_t i = 0; i < a.witness.size(); ++i)
                os << (i ? "," : "") << a.witness[i];
            os << ")";
        }
        if (!a.note.empty()) os << "  [" << a.note << "]";
        os << "\n";
    }
    return os.str();
}

} // namespace hk
