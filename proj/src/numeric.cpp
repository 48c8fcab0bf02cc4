#include "zono/numeric.hpp"

#include <charconv>

#include "zono/error.hpp"

namespace zono {

Integer binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer factorial(std::int64_t n) {
    Integer r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

bool is_integral(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q) {
    if (!is_integral(q))
        throw MathError("NonIntegral", "expected an integer, got " + to_string(q));
    return boost::multiprecision::numerator(q);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
    if (is_integral(q)) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (digits.empty())
        throw MathError("ParseError", "malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw MathError("ParseError", "malformed rational '" + std::string(whole) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw MathError("ParseError", "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace zono
