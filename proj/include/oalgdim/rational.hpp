#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oalgdim {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long long>;

// Accepts "a" or "a/b" with optional sign; rejects decimals and exponents.
Rational parse_rational(std::string_view text);

// Comma-separated list of rationals; the empty string yields an empty list.
RationalVector parse_rational_list(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

}  // namespace oalgdim
