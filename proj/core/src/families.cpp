#include "hk/families.hpp"

namespace hk {
namespace {

// encoding tags shared by the rational families
constexpr int kZero = 0, kTang = 1, kGhost = 2;

std::vector<Rational> window_values(int variant) {
    switch (variant) {
        case 1: return {Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
        case 2: return {Rational(0), Rational(1, 2), Rational(5, 3), Rational(7, 2)};
        default: return {Rational(0), Rational(1), Rational(2), Rational(3)};
    }
}

} // namespace

SupertropicalCarrier::SupertropicalCarrier() {
    zero_ = intern({kZero, Rational(0)});
    one_ = intern({kTang, Rational(0)});
}

Elem SupertropicalCarrier::add(Elem a, Elem b) {
    if (a == zero_) return b;
    if (b == zero_) return a;
    auto [ta, va] = enc(a);
    auto [tb, vb] = enc(b);
    if (va < vb) return b;
    if (vb < va) return a;
    return intern({kGhost, va});
}

std::optional<Elem> SupertropicalCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    auto [ta, va] = enc(a);
    auto [tb, vb] = enc(b);
    return intern({ta == kGhost || tb == kGhost ? kGhost : kTang, va + vb});
}

bool SupertropicalCarrier::leq(Elem b1, Elem b2) {
    if (b1 == b2) return true;
    auto [t2, v2] = enc(b2);
    if (t2 != kGhost) return false;
    if (b1 == zero_) return true;
    auto [t1, v1] = enc(b1);
    return v1 <= v2;
}

std::optional<Elem> SupertropicalCarrier::div_tangible(Elem a, Elem target) {
    if (a == zero_) return target == zero_ ? std::optional<Elem>(zero_) : std::nullopt;
    if (target == zero_) return zero_;
    auto [ta, va] = enc(a);
    auto [tt, vt] = enc(target);
    if (ta == kGhost || tt == kGhost) return std::nullopt;  // quotients stay tangible
    return tangible_of(vt - va);
}

std::vector<Elem> SupertropicalCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    for (const auto& v : window_values(variant)) out.push_back(tangible_of(v));
    for (const auto& v : window_values(variant)) out.push_back(ghost_of(v));
    return out;
}

std::string SupertropicalCarrier::label(Elem a) const {
    auto [t, v] = enc(a);
    if (t == kZero) return "O";
    return t == kGhost ? v.str() + "v" : v.str();
}

std::optional<Elem> SupertropicalCarrier::parse_label(const std::string& s) {
    try {
        if (s == "O") return zero_;
        if (!s.empty() && s.back() == 'v')
            return ghost_of(Rational::parse(s.substr(0, s.size() - 1)));
        return tangible_of(Rational::parse(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

MaxplusCarrier::MaxplusCarrier() {
    zero_ = intern({kZero, Rational(0)});
    one_ = intern({kTang, Rational(0)});
}

Elem MaxplusCarrier::add(Elem a, Elem b) {
    if (a == zero_) return b;
    if (b == zero_) return a;
    return std::get<1>(enc(a)) >= std::get<1>(enc(b)) ? a : b;
}

std::optional<Elem> MaxplusCarrier::mul(Elem a, Elem b) {
    if (a == zero_ || b == zero_) return zero_;
    return intern({kTang, std::get<1>(enc(a)) + std::get<1>(enc(b))});
}

std::vector<Elem> MaxplusCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    for (const auto& v : window_values(variant)) out.push_back(of(v));
    return out;
}

std::string MaxplusCarrier::label(Elem a) const {
    return a == 0 ? "O" : std::get<1>(enc(a)).str();
}

std::optional<Elem> MaxplusCarrier::parse_label(const std::string& s) {
    try {
        if (s == "O") return zero_;
        return of(Rational::parse(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

NaturalsCarrier::NaturalsCarrier() {
    zero_ = intern(0);
    one_ = intern(1);
}

std::vector<Elem> NaturalsCarrier::window(int variant) {
    std::vector<Elem> out;
    int hi = variant == 0 ? 4 : 3 + variant * 2;
    for (long long v = 0; v <= hi; ++v) out.push_back(of(v));
    return out;
}

std::optional<Elem> NaturalsCarrier::parse_label(const std::string& s) {
    try {
        long long v = std::stoll(s);
        if (v < 0) return std::nullopt;
        return of(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

ZWindowCarrier::ZWindowCarrier() {
    zero_ = intern(0);
    one_ = intern(1);
}

std::vector<Elem> ZWindowCarrier::window(int variant) {
    std::vector<Elem> out;
    long long b = variant == 0 ? 3 : (variant == 1 ? 5 : 2);
    for (long long v = -b; v <= b; ++v) out.push_back(of(v));
    return out;
}

std::optional<Elem> ZWindowCarrier::parse_label(const std::string& s) {
    try {
        return of(std::stoll(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

TriangleZCarrier::TriangleZCarrier() {
    zero_ = intern({0, 0});
    one_ = intern({1, 1});
}

Elem TriangleZCarrier::add(Elem a, Elem b) {
    auto [a1, a2] = enc(a);
    auto [b1, b2] = enc(b);
    long long lo = std::max<long long>({0, a1 - b2, b1 - a2});
    return intern({lo, a2 + b2});
}

std::optional<Elem> TriangleZCarrier::mul(Elem a, Elem b) {
    auto [a1, a2] = enc(a);
    auto [b1, b2] = enc(b);
    return intern({a1 * b1, a2 * b2});
}

std::vector<Elem> TriangleZCarrier::window(int variant) {
    std::vector<Elem> out{zero_};
    long long hi = variant == 2 ? 2 : 3;
    for (long long v = 1; v <= hi; ++v) out.push_back(point(v));
    // a few derived intervals, including the null-but-not-quasi-zero [0,3]
    out.push_back(interval(0, 2));
    out.push_back(interval(1, 3));
    out.push_back(interval(0, 3));
    out.push_back(interval(0, 4));
    if (variant == 1) {
        out.push_back(interval(2, 4));
        out.push_back(interval(0, 6));
    }
    return out;
}

std::string TriangleZCarrier::label(Elem a) const {
    auto [lo, hi] = enc(a);
    if (lo == hi) return std::to_string(lo);
    return "[" + std::to_string(lo) + ".." + std::to_string(hi) + "]";
}

std::optional<Elem> TriangleZCarrier::parse_label(const std::string& s) {
    try {
        if (!s.empty() && s.front() == '[') {
            auto dots = s.find("..");
            if (dots == std::string::npos || s.back() != ']') return std::nullopt;
            long long lo = std::stoll(s.substr(1, dots - 1));
            long long hi = std::stoll(s.substr(dots + 2, s.size() - dots - 3));
            if (lo < 0 || hi < lo) return std::nullopt;
            if (lo != 0 && (hi - lo) % 2 != 0) return std::nullopt;
            return interval(lo, hi);
        }
        long long v = std::stoll(s);
        if (v < 0) return std::nullopt;
        return point(v);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

QFieldCarrier::QFieldCarrier() {
    zero_ = intern(Rational(0));
    one_ = intern(Rational(1));
}

std::vector<Elem> QFieldCarrier::window(int variant) {
    std::vector<Elem> out;
    for (const auto& v : window_values(variant)) {
        out.push_back(of(v));
        out.push_back(of(-v));
    }
    out.push_back(zero_);
    out.push_back(one_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Elem> QFieldCarrier::parse_label(const std::string& s) {
    try {
        return of(Rational::parse(s));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

FiniteHyperTable krasner_table() {
    FiniteHyperTable t;
    t.name = "krasner";
    t.labels = {"0", "1"};
    t.zero = 0;
    t.one = 1;
    t.neg = {0, 1};
    t.add = {{SubsetVal{0}, SubsetVal{1}}, {SubsetVal{1}, SubsetVal{0, 1}}};
    t.mul = {{0, 0}, {0, 1}};
    return t;
}

FiniteHyperTable signs_table() {
    FiniteHyperTable t;
    t.name = "signs";
    t.labels = {"0", "1", "-1"};
    t.zero = 0;
    t.one = 1;
    t.neg = {0, 2, 1};
    t.add.assign(3, std::vector<SubsetVal>(3));
    t.add[0][0] = SubsetVal{0};
    t.add[0][1] = t.add[1][0] = SubsetVal{1};
    t.add[0][2] = t.add[2][0] = SubsetVal{2};
    t.add[1][1] = SubsetVal{1};
    t.add[2][2] = SubsetVal{2};
    t.add[1][2] = t.add[2][1] = SubsetVal{0, 1, 2};
    t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    return t;
}

FiniteHyperTable viro_multigroup_table() {
    // Viro's three-element multigroup: associative with unique hypernegatives
    // but not reversible, hence not a hypergroup.
    FiniteHyperTable t;
    t.name = "viro-multigroup";
    t.labels = {"0", "1", "2"};
    t.zero = 0;
    t.one = 1;
    t.neg = {0, 2, 1};
    t.add.assign(3, std::vector<SubsetVal>(3));
    t.add[0][0] = SubsetVal{0};
    t.add[0][1] = t.add[1][0] = SubsetVal{1};
    t.add[0][2] = t.add[2][0] = SubsetVal{2};
    t.add[1][1] = SubsetVal{2};
    t.add[1][2] = t.add[2][1] = SubsetVal{0, 1};
    t.add[2][2] = SubsetVal{1, 2};
    // multiplicative monoid on {1,2} with 2*2=1 (only the additive structure
    // matters for this fixture)
    t.mul = {{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
    return t;
}

FiniteHyperTable tropical_chain_table(int chain) {
    // tropical hyperfield on the chain O < 0 < 1 < ... < chain-1, written
    // with "O" as the zero element and "k" as value k
    FiniteHyperTable t;
    t.name = "tropical-" + std::to_string(chain);
    t.labels.push_back("O");
    for (int i = 0; i < chain; ++i) t.labels.push_back(std::to_string(i));
    const int n = chain + 1;
    t.zero = 0;
    t.one = 1;  // value 0
    t.neg.resize(n);
    for (int i = 0; i < n; ++i) t.neg[i] = i;
    t.add.assign(n, std::vector<SubsetVal>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == 0) t.add[i][j] = SubsetVal::singleton(j);
            else if (j == 0) t.add[i][j] = SubsetVal::singleton(i);
            else if (i != j) t.add[i][j] = SubsetVal::singleton(std::max(i, j));
            else {
                std::vector<Elem> below;
                for (int k = 0; k <= i; ++k) below.push_back(k);
                t.add[i][j] = SubsetVal(std::move(below));
            }
        }
    t.mul.assign(n, std::vector<Elem>(n, 0));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            int v = (i - 1) + (j - 1);
            t.mul[i][j] = v + 1 <= chain ? v + 1 : chain;  // clipped at the top
        }
    return t;
}

FiniteSystemTable boolean_semiring_table() {
    FiniteSystemTable t;
    t.name = "boolean";
    t.labels = {"0", "1"};
    t.zero = 0;
    t.one = 1;
    t.tangible = {false, true};
    t.neg = {0, 1};
    t.add = {{0, 1}, {1, 1}};
    t.mul.assign(2, std::vector<std::optional<Elem>>(2));
    t.mul[0][0] = 0;
    t.mul[0][1] = 0;
    t.mul[1][0] = 0;
    t.mul[1][1] = 1;
    t.surpass = SurpassSpec::circ();
    return t;
}

FiniteSystemTable sign_semiring_table() {
    // L = {0, 1, -1, inf} with 1 + (-1) = inf, the hypersystem of the signs
    FiniteSystemTable t;
    t.name = "sign-semiring";
    t.labels = {"0", "1", "-1", "inf"};
    t.zero = 0;
    t.one = 1;
    t.tangible = {false, true, true, false};
    t.neg = {0, 2, 1, 3};
    auto idx = [](int a) { return a; };
    t.add.assign(4, std::vector<Elem>(4));
    for (int a = 0; a < 4; ++a) t.add[a][0] = t.add[0][a] = idx(a);
    t.add[1][1] = 1;
    t.add[2][2] = 2;
    t.add[1][2] = t.add[2][1] = 3;
    t.add[1][3] = t.add[3][1] = 3;
    t.add[2][3] = t.add[3][2] = 3;
    t.add[3][3] = 3;
    t.mul.assign(4, std::vector<std::optional<Elem>>(4));
    for (int a = 0; a < 4; ++a) {
        t.mul[a][0] = 0;
        t.mul[0][a] = 0;
    }
    t.mul[1][1] = 1;
    t.mul[1][2] = 2;
    t.mul[2][1] = 2;
    t.mul[2][2] = 1;
    t.mul[1][3] = 3;
    t.mul[3][1] = 3;
    t.mul[2][3] = 3;
    t.mul[3][2] = 3;
    t.mul[3][3] = 3;
    t.surpass = SurpassSpec::circ();
    return t;
}

FiniteSystemTable characteristic_triple_table() {
    FiniteSystemTable t = sign_semiring_table();
    t.name = "characteristic-triple";
    t.labels = {"0", "1", "-1", "e"};
    return t;
}

FiniteSystemTable supertropical3_table() {
    FiniteSystemTable t;
    t.name = "supertropical3";
    t.labels = {"0", "1", "1v"};
    t.zero = 0;
    t.one = 1;
    t.tangible = {false, true, false};
    t.neg = {0, 1, 2};
    t.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
    t.mul.assign(3, std::vector<std::optional<Elem>>(3));
    for (int a = 0; a < 3; ++a) {
        t.mul[a][0] = 0;
        t.mul[0][a] = 0;
    }
    t.mul[1][1] = 1;
    t.mul[1][2] = 2;
    t.mul[2][1] = 2;
    t.mul[2][2] = 2;
    t.surpass = SurpassSpec::circ();
    return t;
}

} // namespace hk
