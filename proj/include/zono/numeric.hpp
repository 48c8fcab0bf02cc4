#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zono {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer binomial(std::int64_t n, std::int64_t k);
Integer factorial(std::int64_t n);

bool is_integral(const Rational& q);
Integer to_integer(const Rational& q);  // throws MathError unless integral

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);  // "p" or "p/q"

// Accepts "p", "-p", "p/q"; the result is reduced.
Rational parse_rational(std::string_view text);

}  // namespace zono
