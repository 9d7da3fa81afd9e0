#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace linarr {

// Exact rational arithmetic. Every closed-form identity in the library is
// exact, so equality checks are done on this type; floating point views are
// derived from it, never the other way around.
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) /
         static_cast<double>(r.denominator());
}

// "4", "17/7"
std::string to_string(const Rational& r);

// Display form with two significant digits, integers printed exactly.
std::string format_sig2(double v);
std::string format_sig2(const Rational& r);

// Shortest representation that round-trips through a double.
std::string format_full(double v);
std::string format_full(const Rational& r);

}  // namespace linarr
