#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace kex {

/// Exact rational used for every threshold that decides a branch
/// (epsilon, delta, bound formulas). Never converted through floating point.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

/// Accepts "p/q", integers and plain decimals ("0.25", "-1.5").
/// Throws std::invalid_argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace kex
