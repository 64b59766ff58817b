#include "hk/table.hpp"

namespace hk {

std::string SurpassSpec::variant_name() const {
    switch (variant) {
        case Variant::Circ: return "circ";
        case Variant::Ideal: return "ideal";
        case Variant::Explicit: return "explicit";
        case Variant::Inclusion: return "inclusion";
    }
    return "?";
}

std::optional<Elem> FiniteHyperTable::find_label(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == s) return i;
    return std::nullopt;
}

SubsetVal FiniteHyperTable::add_set_elem(const SubsetVal& s, Elem a) const {
    SubsetVal out;
    for (Elem x : s) out = out.union_with(add[x][a]);
    return out;
}

SubsetVal FiniteHyperTable::add_sets(const SubsetVal& s1, const SubsetVal& s2) const {
    SubsetVal out;
    for (Elem x : s1)
        for (Elem y : s2) out = out.union_with(add[x][y]);
    return out;
}

SubsetVal FiniteHyperTable::mul_sets(const SubsetVal& s1, const SubsetVal& s2) const {
    std::vector<Elem> out;
    for (Elem x : s1)
        for (Elem y : s2) out.push_back(mul[x][y]);
    return SubsetVal(std::move(out));
}

SubsetVal FiniteHyperTable::neg_set(const SubsetVal& s) const {
    std::vector<Elem> out;
    for (Elem x : s) out.push_back(neg[x]);
    return SubsetVal(std::move(out));
}

bool FiniteHyperTable::is_single_valued() const {
    for (const auto& row : add)
        for (const auto& v : row)
            if (!v.is_singleton()) return false;
    return true;
}

void FiniteHyperTable::validate() const {
    const int n = size();
    if (n == 0) throw ValidationError("carrier", "empty carrier");
    if (static_cast<int>(neg.size()) != n || static_cast<int>(add.size()) != n ||
        static_cast<int>(mul.size()) != n)
        throw ValidationError("tables", "table dimensions do not match carrier size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (labels[i] == labels[j] && i != j)
                throw ValidationError("labels", "duplicate label '" + labels[i] + "'");
    for (int a = 0; a < n; ++a) {
        if (neg[a] < 0 || neg[a] >= n)
            throw ValidationError("neg", "out-of-range image at " + labels[a]);
        if (neg[neg[a]] != a)
            throw ValidationError("neg-involution",
                                  "neg(neg(" + labels[a] + ")) = " + labels[neg[neg[a]]]);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (add[a][b].empty())
                throw ValidationError("add-nonempty",
                                      "empty sum at (" + labels[a] + "," + labels[b] + ")");
            if (add[a][b] != add[b][a])
                throw ValidationError("add-commutative",
                                      "(" + labels[a] + "," + labels[b] + ")");
            for (Elem x : add[a][b])
                if (x < 0 || x >= n)
                    throw ValidationError("add", "out-of-range sum member");
        }
        if (add[a][zero] != SubsetVal::singleton(a))
            throw ValidationError("zero-neutral", labels[a]);
        if (mul[zero][a] != zero || mul[a][zero] != zero)
            throw ValidationError("zero-absorbing", labels[a]);
    }
}

std::optional<Elem> FiniteSystemTable::find_label(const std::string& s) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == s) return i;
    return std::nullopt;
}

bool FiniteSystemTable::mul_total() const {
    for (const auto& row : mul)
        for (const auto& v : row)
            if (!v) return false;
    return true;
}

void FiniteSystemTable::validate() const {
    const int n = size();
    if (n == 0) throw ValidationError("carrier", "empty carrier");
    for (int a = 0; a < n; ++a) {
        if (neg[neg[a]] != a)
            throw ValidationError("neg-involution", labels[a]);
        if (add[a][zero] != a)
            throw ValidationError("zero-neutral", labels[a]);
        for (int b = 0; b < n; ++b) {
            if (add[a][b] != add[b][a])
                throw ValidationError("add-commutative", "(" + labels[a] + "," + labels[b] + ")");
            for (int c = 0; c < n; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    throw ValidationError("add-associative",
                                          "(" + labels[a] + "," + labels[b] + "," + labels[c] + ")");
        }
    }
    if (mul_total()) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (tangible[a] && tangible[b]) {
                    Elem p = *mul[a][b];
                    if (!tangible[p] && p != zero)
                        throw ValidationError("tangible-mul-closure",
                                              "(" + labels[a] + "," + labels[b] + ")");
                }
    }
    if (surpass.variant == SurpassSpec::Variant::Explicit) {
        // explicit tables must be reflexive and transitive
        auto rel = [&](Elem x, Elem y) {
            if (x == y) return true;
            for (auto& [p, q] : surpass.pairs)
                if (p == x && q == y) return true;
            return false;
        };
        for (auto& [p, q] : surpass.pairs)
            for (auto& [r, s] : surpass.pairs)
                if (q == r && !rel(p, s))
                    throw ValidationError("surpass-transitive",
                                          labels[p] + "," + labels[q] + "," + labels[s]);
    }
}

std::string subset_label(const FiniteHyperTable& t, const SubsetVal& s) {
    // the pipe separator keeps set labels legal inside HSF pair keys
    std::string out = "{";
    bool first = true;
    for (Elem x : s) {
        if (!first) out += "|";
        out += t.label(x);
        first = false;
    }
    return out + "}";
}

} // namespace hk
