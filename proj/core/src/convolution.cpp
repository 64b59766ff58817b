#include "hk/convolution.hpp"

#include "hk/report.hpp"

#include <algorithm>
#include <numeric>

namespace hk {

DirectSumCarrier::DirectSumCarrier(std::vector<std::shared_ptr<Carrier>> parts,
                                   DirectSumOption opt)
    : parts_(std::move(parts)), opt_(opt) {
    std::vector<Elem> z;
    for (auto& p : parts_) z.push_back(p->zero());
    zero_ = intern(z);
    std::vector<Elem> o;
    bool all_one = !parts_.empty();
    for (auto& p : parts_) {
        auto po = p->one();
        if (!po) { all_one = false; break; }
        o.push_back(*po);
    }
    if (all_one) one_ = intern(o);
}

std::string DirectSumCarrier::name() const {
    std::string out = "direct-sum" + std::to_string(static_cast<int>(opt_)) + "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + parts_[i]->name();
    return out + ")";
}

Elem DirectSumCarrier::add(Elem a, Elem b) {
    std::vector<Elem> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out[i] = parts_[i]->add(enc(a)[i], enc(b)[i]);
    return intern(out);
}

Elem DirectSumCarrier::neg(Elem a) {
    std::vector<Elem> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i]->neg(enc(a)[i]);
    return intern(out);
}

std::optional<Elem> DirectSumCarrier::mul(Elem a, Elem b) {
    std::vector<Elem> out(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        auto p = parts_[i]->mul(enc(a)[i], enc(b)[i]);
        if (!p) return std::nullopt;
        out[i] = *p;
    }
    return intern(out);
}

bool DirectSumCarrier::total_mul() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const auto& p) { return p->total_mul(); });
}

bool DirectSumCarrier::tangible(Elem a) {
    const auto& v = enc(a);
    switch (opt_) {
        case DirectSumOption::Diagonal: {
            for (std::size_t i = 0; i < parts_.size(); ++i)
                if (!parts_[i]->tangible(v[i])) return false;
            // diagonal embedding needs identical labels across equal parts
            for (std::size_t i = 1; i < parts_.size(); ++i)
                if (parts_[i]->label(v[i]) != parts_[0]->label(v[0])) return false;
            return !parts_.empty();
        }
        case DirectSumOption::Disjoint: {
            int nonzero = -1;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (v[i] == parts_[i]->zero()) continue;
                if (nonzero >= 0) return false;
                nonzero = static_cast<int>(i);
            }
            return nonzero >= 0 && parts_[nonzero]->tangible(v[nonzero]);
        }
        case DirectSumOption::Product: {
            bool some = false;
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (v[i] == parts_[i]->zero()) continue;
                if (!parts_[i]->tangible(v[i])) return false;
                some = true;
            }
            return some;
        }
    }
    return false;
}

bool DirectSumCarrier::leq(Elem b1, Elem b2) {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!parts_[i]->leq(enc(b1)[i], enc(b2)[i])) return false;
    return true;
}

bool DirectSumCarrier::null(Elem b) {
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (!parts_[i]->null(enc(b)[i])) return false;
    return true;
}

std::vector<Elem> DirectSumCarrier::window(int variant) {
    std::vector<std::vector<Elem>> grids;
    for (auto& p : parts_) grids.push_back(p->window(variant));
    std::vector<Elem> out;
    std::vector<std::size_t> idx(parts_.size(), 0);
    while (true) {
        std::vector<Elem> tuple(parts_.size());
        for (std::size_t i = 0; i < parts_.size(); ++i) tuple[i] = grids[i][idx[i]];
        out.push_back(intern(tuple));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == grids[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

bool DirectSumCarrier::window_closed(int v) const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [v](const auto& p) { return p->window_closed(v); });
}

bool DirectSumCarrier::finite() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const auto& p) { return p->finite(); });
}

std::string DirectSumCarrier::label(Elem a) const {
    std::string out = "<";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += (i ? "," : "") + parts_[i]->label(enc(a)[i]);
    return out + ">";
}

std::optional<Elem> DirectSumCarrier::parse_label(const std::string& s) {
    if (s.size() < 2 || s.front() != '<' || s.back() != '>') return std::nullopt;
    std::vector<Elem> tuple;
    std::size_t pos = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        std::size_t end = i + 1 == parts_.size() ? s.size() - 1 : s.find(',', pos);
        if (end == std::string::npos) return std::nullopt;
        auto e = parts_[i]->parse_label(s.substr(pos, end - pos));
        if (!e) return std::nullopt;
        tuple.push_back(*e);
        pos = end + 1;
    }
    return intern(tuple);
}

PolyCarrier::PolyCarrier(std::shared_ptr<Carrier> base, int nvars, int degcap)
    : base_(std::move(base)), nvars_(nvars), degcap_(degcap) {
    zero_ = intern({});
    auto bone = base_->one();
    if (!bone) throw std::domain_error("polynomial system: base needs a unit");
    one_ = monomial(Monomial(nvars_, 0), *bone);
}

std::string PolyCarrier::name() const {
    return "poly(" + base_->name() + "," + std::to_string(nvars_) + "var,deg<=" +
           std::to_string(degcap_) + ")";
}

Elem PolyCarrier::monomial(const Monomial& m, Elem coeff) {
    if (static_cast<int>(m.size()) != nvars_)
        throw std::domain_error("polynomial system: wrong monomial arity");
    if (std::accumulate(m.begin(), m.end(), 0) > degcap_)
        throw ResourceError("polynomial system: monomial exceeds the degree cap");
    if (coeff == base_->zero()) return zero_;
    return intern({{m, coeff}});
}

Elem PolyCarrier::add(Elem a, Elem b) {
    std::vector<std::pair<Monomial, Elem>> out;
    const auto& pa = enc(a);
    const auto& pb = enc(b);
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        if (j == pb.size() || (i < pa.size() && pa[i].first < pb[j].first)) {
            out.push_back(pa[i++]);
        } else if (i == pa.size() || pb[j].first < pa[i].first) {
            out.push_back(pb[j++]);
        } else {
            Elem c = base_->add(pa[i].second, pb[j].second);
            if (c != base_->zero()) out.push_back({pa[i].first, c});
            ++i;
            ++j;
        }
    }
    return intern(out);
}

Elem PolyCarrier::neg(Elem a) {
    auto out = enc(a);
    for (auto& [m, c] : out) c = base_->neg(c);
    return intern(out);
}

std::optional<Elem> PolyCarrier::mul(Elem a, Elem b) {
    Elem acc = zero_;
    for (const auto& [ma, ca] : enc(a))
        for (const auto& [mb, cb] : enc(b)) {
            Monomial m(nvars_);
            int deg = 0;
            for (int k = 0; k < nvars_; ++k) deg += (m[k] = ma[k] + mb[k]);
            if (deg > degcap_)
                throw ResourceError("polynomial system: product exceeds the degree cap");
            auto c = base_->mul(ca, cb);
            if (!c) return std::nullopt;
            acc = add(acc, monomial(m, *c));
        }
    return acc;
}

bool PolyCarrier::tangible(Elem a) {
    const auto& p = enc(a);
    return p.size() == 1 && base_->tangible(p[0].second);
}

bool PolyCarrier::leq(Elem b1, Elem b2) {
    // coefficientwise comparison; missing coefficients are base zero
    const auto& pa = enc(b1);
    const auto& pb = enc(b2);
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        if (j == pb.size() || (i < pa.size() && pa[i].first < pb[j].first)) {
            if (!base_->leq(pa[i].second, base_->zero())) return false;
            ++i;
        } else if (i == pa.size() || pb[j].first < pa[i].first) {
            if (!base_->leq(base_->zero(), pb[j].second)) return false;
            ++j;
        } else {
            if (!base_->leq(pa[i].second, pb[j].second)) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

bool PolyCarrier::null(Elem b) {
    for (const auto& [m, c] : enc(b))
        if (!base_->null(c)) return false;
    return true;
}

std::vector<Elem> PolyCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    auto bw = base_->window(variant);
    Monomial lambda(nvars_, 0);
    lambda[0] = 1;
    for (Elem c : bw) {
        if (c == base_->zero()) continue;
        out.push_back(constant(c));
        out.push_back(monomial(lambda, c));
    }
    if (auto bone = base_->one()) {
        Elem lin = add(constant(*bone), monomial(lambda, *bone));  // 1 + x
        out.push_back(lin);
        out.push_back(add(constant(*bone), monomial(lambda, base_->neg(*bone))));  // 1 (-) x
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Elem> PolyCarrier::coeff_at(Elem a, const Monomial& m) const {
    for (const auto& [mm, c] : enc(a))
        if (mm == m) return c;
    return std::nullopt;
}

std::string PolyCarrier::label(Elem a) const {
    const auto& p = enc(a);
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < p.size(); ++t) {
        if (t) out += " + ";
        out += base_->label(p[t].second);
        for (int k = 0; k < nvars_; ++k) {
            if (p[t].first[k] == 0) continue;
            out += std::string(1, static_cast<char>('x' + k));
            if (p[t].first[k] > 1) out += "^" + std::to_string(p[t].first[k]);
        }
    }
    return out;
}

MatrixCarrier::MatrixCarrier(std::shared_ptr<Carrier> base, int n)
    : base_(std::move(base)), n_(n) {
    std::vector<Elem> z(n_ * n_, base_->zero());
    zero_ = intern(z);
    auto bone = base_->one();
    if (!bone) throw std::domain_error("matrix system: base needs a unit");
    auto id = z;
    for (int i = 0; i < n_; ++i) id[i * n_ + i] = *bone;
    one_ = intern(id);
}

std::string MatrixCarrier::name() const {
    return "matrix" + std::to_string(n_) + "(" + base_->name() + ")";
}

Elem MatrixCarrier::unit_matrix(int i, int j, Elem v) {
    std::vector<Elem> m(n_ * n_, base_->zero());
    m[i * n_ + j] = v;
    return intern(m);
}

Elem MatrixCarrier::add(Elem a, Elem b) {
    std::vector<Elem> out(n_ * n_);
    for (int k = 0; k < n_ * n_; ++k) out[k] = base_->add(enc(a)[k], enc(b)[k]);
    return intern(out);
}

Elem MatrixCarrier::neg(Elem a) {
    std::vector<Elem> out(n_ * n_);
    for (int k = 0; k < n_ * n_; ++k) out[k] = base_->neg(enc(a)[k]);
    return intern(out);
}

std::optional<Elem> MatrixCarrier::mul(Elem a, Elem b) {
    std::vector<Elem> out(n_ * n_, base_->zero());
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Elem acc = base_->zero();
            for (int k = 0; k < n_; ++k) {
                auto p = base_->mul(enc(a)[i * n_ + k], enc(b)[k * n_ + j]);
                if (!p) return std::nullopt;
                acc = base_->add(acc, *p);
            }
            out[i * n_ + j] = acc;
        }
    return intern(out);
}

bool MatrixCarrier::tangible(Elem a) {
    int nonzero = -1;
    for (int k = 0; k < n_ * n_; ++k) {
        if (enc(a)[k] == base_->zero()) continue;
        if (nonzero >= 0) return false;
        nonzero = k;
    }
    return nonzero >= 0 && base_->tangible(enc(a)[nonzero]);
}

bool MatrixCarrier::leq(Elem b1, Elem b2) {
    for (int k = 0; k < n_ * n_; ++k)
        if (!base_->leq(enc(b1)[k], enc(b2)[k])) return false;
    return true;
}

bool MatrixCarrier::null(Elem b) {
    for (int k = 0; k < n_ * n_; ++k)
        if (!base_->null(enc(b)[k])) return false;
    return true;
}

std::vector<Elem> MatrixCarrier::window(int variant) {
    std::vector<Elem> out{zero_, one_};
    auto bw = base_->window(variant);
    int pushed = 0;
    for (Elem v : bw) {
        if (v == base_->zero()) continue;
        for (int i = 0; i < n_ && pushed < 24; ++i)
            for (int j = 0; j < n_; ++j) {
                out.push_back(unit_matrix(i, j, v));
                ++pushed;
            }
    }
    // one dense sample
    std::vector<Elem> dense(n_ * n_, base_->zero());
    for (int k = 0; k < n_ * n_; ++k) dense[k] = bw[k % bw.size()];
    out.push_back(intern(dense));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string MatrixCarrier::label(Elem a) const {
    std::string out = "[";
    for (int i = 0; i < n_; ++i) {
        if (i) out += ";";
        for (int j = 0; j < n_; ++j) {
            if (j) out += ",";
            out += base_->label(enc(a)[i * n_ + j]);
        }
    }
    return out + "]";
}

} // namespace hk
