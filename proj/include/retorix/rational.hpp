#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace retorix {

// All core arithmetic is exact. Betti numbers are ranks over Q and any
// rounding would silently corrupt them, so no floating point appears
// anywhere in the engine.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using QVector = std::vector<Rational>;

// Canonical rendering: "n" for integers, "n/d" otherwise (d > 0, reduced).
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace retorix
