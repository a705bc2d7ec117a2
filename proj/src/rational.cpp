#include "onsager/rational.hpp"

#include <cctype>
#include <limits>

#include "onsager/error.hpp"

namespace onsager {

namespace {
std::int64_t parse_digits(const std::string& s, const std::string& whole) {
    require(!s.empty(), "malformed number: " + whole);
    std::int64_t v = 0;
    for (char c : s) {
        require(std::isdigit(static_cast<unsigned char>(c)) != 0, "malformed number: " + whole);
        require(v <= (std::numeric_limits<std::int64_t>::max() - 9) / 10,
                "number too large: " + whole);
        v = 10 * v + (c - '0');
    }
    return v;
}
}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    Rational r;
    if (const auto slash = s.find('/'); slash != std::string::npos) {
        const std::int64_t den = parse_digits(s.substr(slash + 1), text);
        require(den != 0, "zero denominator: " + text);
        r = Rational(parse_digits(s.substr(0, slash), text), den);
    } else if (const auto dot = s.find('.'); dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        require(frac.size() <= 15, "too many decimals: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::string ip = s.substr(0, dot);
        r = Rational(ip.empty() ? 0 : parse_digits(ip, text)) +
            Rational(frac.empty() ? 0 : parse_digits(frac, text), den);
    } else {
        r = Rational(parse_digits(s, text));
    }
    return negative ? -r : r;
}

Rational parse_inverse_exponent(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return Rational(0);
    const Rational v = parse_rational(text);
    require(v > 0, "exponent must be positive: " + text);
    return Rational(1) / v;
}

double exponent_from_inverse(const Rational& inv) {
    if (inv == Rational(0)) return std::numeric_limits<double>::infinity();
    return 1.0 / to_double(inv);
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace onsager
