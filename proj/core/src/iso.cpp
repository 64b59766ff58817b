#include "hk/iso.hpp"

#include <algorithm>

namespace hk {
namespace {

struct Search {
    Carrier& a;
    Carrier& b;
    const std::vector<Elem>& wa;
    const std::vector<Elem>& wb;
    std::vector<Elem> ta, tb;       // tangibles of each window
    std::map<Elem, Elem> image;     // partial map a -> b
    std::vector<bool> used;         // of tb

    bool in_wb(Elem x) const {
        return std::find(wb.begin(), wb.end(), x) != wb.end();
    }

    /// Extends the tangible assignment to the full window by spanning sums;
    /// returns false on any structural clash.
    bool close_and_check() {
        std::map<Elem, Elem> full = image;
        full[a.zero()] = b.zero();
        // negations of tangibles
        for (auto& [x, y] : image) {
            Elem nx = a.neg(x), ny = b.neg(y);
            auto it = full.find(nx);
            if (it != full.end() && it->second != ny) return false;
            full[nx] = ny;
        }
        // close under addition until the whole window is mapped
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::pair<Elem, Elem>> items(full.begin(), full.end());
            for (auto& [x1, y1] : items)
                for (auto& [x2, y2] : items) {
                    Elem xs = a.add(x1, x2);
                    Elem ys = b.add(y1, y2);
                    auto it = full.find(xs);
                    if (it != full.end()) {
                        if (it->second != ys) return false;
                    } else {
                        full[xs] = ys;
                        grew = true;
                    }
                }
        }
        for (Elem x : wa)
            if (!full.count(x)) return false;
        // bijectivity onto the window
        std::vector<Elem> hit;
        for (Elem x : wa) hit.push_back(full[x]);
        std::sort(hit.begin(), hit.end());
        if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) return false;
        for (Elem y : hit)
            if (!in_wb(y)) return false;
        if (hit.size() != wb.size()) return false;
        // structure preservation on the window
        for (Elem x1 : wa) {
            Elem y1 = full[x1];
            if (a.tangible(x1) != b.tangible(y1)) return false;
            if (a.null(x1) != b.null(y1)) return false;
            if (full[a.neg(x1)] != b.neg(y1)) return false;
            for (Elem x2 : wa) {
                Elem y2 = full[x2];
                if (full[a.add(x1, x2)] != b.add(y1, y2)) return false;
                if (a.leq(x1, x2) != b.leq(y1, y2)) return false;
                auto pa = a.mul(x1, x2);
                auto pb = b.mul(y1, y2);
                if (pa && pb) {
                    auto it = full.find(*pa);
                    if (it != full.end() && it->second != *pb) return false;
                }
            }
        }
        image = full;
        return true;
    }

    bool assign(std::size_t k) {
        if (k == ta.size()) return close_and_check();
        for (std::size_t j = 0; j < tb.size(); ++j) {
            if (used[j]) continue;
            auto oa = a.one();
            auto ob = b.one();
            if (oa && ob && (ta[k] == *oa) != (tb[j] == *ob)) continue;
            image[ta[k]] = tb[j];
            used[j] = true;
            auto saved = image;
            if (assign(k + 1)) return true;
            image = std::move(saved);
            image.erase(ta[k]);
            used[j] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::map<Elem, Elem>> find_isomorphism(Carrier& a, const std::vector<Elem>& wa,
                                                     Carrier& b,
                                                     const std::vector<Elem>& wb) {
    if (wa.size() != wb.size()) return std::nullopt;
    Search s{a, b, wa, wb, {}, {}, {}, {}};
    for (Elem x : wa)
        if (a.tangible(x)) s.ta.push_back(x);
    for (Elem y : wb)
        if (b.tangible(y)) s.tb.push_back(y);
    if (s.ta.size() != s.tb.size()) return std::nullopt;
    s.used.assign(s.tb.size(), false);
    if (s.assign(0)) return s.image;
    return std::nullopt;
}

} // namespace hk
