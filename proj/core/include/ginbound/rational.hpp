#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ginbound {

using Rational = boost::rational<std::int64_t>;

/// Largest integer <= r.
inline std::int64_t floor_of(const Rational& r) {
    const auto n = r.numerator();
    const auto d = r.denominator();  // always positive
    return n >= 0 ? n / d : -((-n + d - 1) / d);
}

/// Smallest integer >= r.
inline std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Floor division with rounding toward negative infinity.
inline std::int64_t floor_div(std::int64_t n, std::int64_t d) { return floor_of(Rational(n, d)); }

}  // namespace ginbound
