#include "hk/rational.hpp"

#include <cctype>

namespace hk {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    auto to_i64 = [](const std::string& part) {
        std::size_t pos = 0;
        long long v = std::stoll(part, &pos);
        if (pos != part.size())
            throw std::invalid_argument("Rational::parse: trailing junk in '" + part + "'");
        return static_cast<std::int64_t>(v);
    };
    if (slash == std::string::npos) return Rational(to_i64(s));
    return Rational(to_i64(s.substr(0, slash)), to_i64(s.substr(slash + 1)));
}

} // namespace hk
