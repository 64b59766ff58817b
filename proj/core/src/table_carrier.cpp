#include "hk/table_carrier.hpp"

#include <numeric>

namespace hk {
namespace {

// For the inclusion variant the element labels are set labels written by the
// bridge, e.g. "{0|1}".  Member names are matched against singleton labels.
SubsetVal parse_set_label(const FiniteSystemTable& t, const std::string& lab) {
    if (lab.size() < 2 || lab.front() != '{' || lab.back() != '}')
        throw ValidationError("surpass-inclusion",
                              "label '" + lab + "' is not a set label");
    std::vector<Elem> members;
    std::string body = lab.substr(1, lab.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
        auto bar = body.find('|', pos);
        std::string part = body.substr(pos, bar == std::string::npos ? std::string::npos
                                                                     : bar - pos);
        auto id = t.find_label("{" + part + "}");
        if (!id) throw ValidationError("surpass-inclusion",
                                       "no singleton '{" + part + "}' for member of " + lab);
        members.push_back(*id);
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    return SubsetVal(std::move(members));
}

} // namespace

TableCarrier::TableCarrier(FiniteSystemTable table) : table_(std::move(table)) {
    table_.validate();
    total_mul_ = table_.mul_total();
    const int n = table_.size();
    switch (table_.surpass.variant) {
        case SurpassSpec::Variant::Circ: {
            for (Elem b = 0; b < n; ++b) {
                Elem q = table_.add[b][table_.neg[b]];
                surpass_candidates_.push_back(q);
            }
            std::sort(surpass_candidates_.begin(), surpass_candidates_.end());
            surpass_candidates_.erase(
                std::unique(surpass_candidates_.begin(), surpass_candidates_.end()),
                surpass_candidates_.end());
            break;
        }
        case SurpassSpec::Variant::Ideal: {
            surpass_candidates_ = table_.surpass.ideal_members;
            // the ideal must contain every quasi-zero
            for (Elem b = 0; b < n; ++b) {
                Elem q = table_.add[b][table_.neg[b]];
                if (std::find(surpass_candidates_.begin(), surpass_candidates_.end(), q) ==
                    surpass_candidates_.end())
                    throw ValidationError("surpass-ideal",
                                          "ideal misses quasi-zero " + table_.label(q));
            }
            break;
        }
        case SurpassSpec::Variant::Explicit:
            break;
        case SurpassSpec::Variant::Inclusion: {
            inclusion_sets_.reserve(n);
            for (Elem i = 0; i < n; ++i)
                inclusion_sets_.push_back(parse_set_label(table_, table_.label(i)));
            break;
        }
    }
}

bool TableCarrier::leq(Elem b1, Elem b2) {
    switch (table_.surpass.variant) {
        case SurpassSpec::Variant::Circ:
        case SurpassSpec::Variant::Ideal:
            for (Elem c : surpass_candidates_)
                if (table_.add[b1][c] == b2) return true;
            return false;
        case SurpassSpec::Variant::Explicit: {
            if (b1 == b2) return true;
            for (auto& [p, q] : table_.surpass.pairs)
                if (p == b1 && q == b2) return true;
            return false;
        }
        case SurpassSpec::Variant::Inclusion:
            return inclusion_sets_[b1].subset_of(inclusion_sets_[b2]);
    }
    return false;
}

std::vector<Elem> TableCarrier::window(int) {
    std::vector<Elem> w(table_.size());
    std::iota(w.begin(), w.end(), 0);
    return w;
}

} // namespace hk
