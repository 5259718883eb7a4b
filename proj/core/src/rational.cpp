#include "twocst/rational.hpp"

#include "twocst/errors.hpp"

namespace twocst {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("bad rational literal: '" + text + "'");
    Int n(num), d(den);
    if (d == 0)
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    return Rat(n) / Rat(d);
}

std::string format_rational(const Rat& value) {
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

} // namespace twocst
