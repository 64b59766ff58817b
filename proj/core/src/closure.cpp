#include "hk/closure.hpp"

#include <cstdlib>
#include <unordered_set>

namespace hk {

std::size_t closure_cap_from_env() {
    if (const char* s = std::getenv("HK_CLOSURE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultClosureCap;
}

std::vector<SubsetVal> closure_under(
    const std::vector<SubsetVal>& seed,
    const std::function<SubsetVal(const SubsetVal&, const SubsetVal&)>& step,
    std::size_t cap) {
    std::vector<SubsetVal> out;
    std::unordered_set<SubsetVal> known;
    auto push = [&](const SubsetVal& v) {
        if (known.insert(v).second) {
            if (out.size() >= cap) throw ClosureOverflow(cap, out);
            out.push_back(v);
        }
    };
    for (const auto& s : seed) push(s);
    // Worklist: every pair (i,j) with j <= i is combined both ways once i is
    // reached, so the derivation order (and hence element numbering) is a
    // pure function of the seed order.
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            SubsetVal a = step(out[i], out[j]);
            push(a);
            if (i != j) push(step(out[j], out[i]));
        }
    }
    return out;
}

} // namespace hk
