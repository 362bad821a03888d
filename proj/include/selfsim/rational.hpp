#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace selfsim {

using Rational = boost::rational<std::int64_t>;

/// "p/q", always with an explicit denominator (integers print as "3/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace selfsim
