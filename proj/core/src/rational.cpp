#include "linarr/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace linarr {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_sig2(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2g", v);
  return buf;
}

std::string format_sig2(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return format_sig2(to_double(r));
}

std::string format_full(double v) {
  char buf[64];
  // Shortest form that round-trips: try increasing precision.
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return buf;
}

std::string format_full(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return format_full(to_double(r));
}

}  // namespace linarr
