#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "treelap/rational.hpp"

namespace treelap {

// Numeric backend traits. The exact backend compares with true equality;
// the float backend uses the banded rule: a value x counts as non-positive
// iff x <= tol_abs + tol_rel * scale, where scale is the max-magnitude
// entry of the matrix the value came from.
template <typename T>
struct Backend;

template <>
struct Backend<Rational> {
  using scalar = Rational;
  static constexpr bool exact = true;
  static const char* name() { return "exact"; }

  static Rational from_rational(const Rational& r) { return r; }
  static Rational band(const Rational&) { return Rational(0); }
  static bool eq(const Rational& a, const Rational& b, const Rational& = Rational(0)) {
    return a == b;
  }
  static bool is_zero(const Rational& x, const Rational& = Rational(0)) { return x.is_zero(); }
  static bool nonpositive(const Rational& x, const Rational& = Rational(0)) {
    return x.sign() <= 0;
  }
  static bool nonnegative(const Rational& x, const Rational& = Rational(0)) {
    return x.sign() >= 0;
  }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct Backend<double> {
  using scalar = double;
  static constexpr bool exact = false;
  static constexpr double tol_abs = 1e-12;
  static constexpr double tol_rel = 1e-9;
  static const char* name() { return "float"; }

  static double from_rational(const Rational& r) { return r.to_double(); }
  static double band(double scale) { return tol_abs + tol_rel * std::abs(scale); }
  static bool eq(double a, double b, double scale = 1.0) {
    return std::abs(a - b) <= band(scale);
  }
  static bool is_zero(double x, double scale = 1.0) { return std::abs(x) <= band(scale); }
  static bool nonpositive(double x, double scale = 1.0) { return x <= band(scale); }
  static bool nonnegative(double x, double scale = 1.0) { return x >= -band(scale); }
  static std::string str(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
  }
};

}  // namespace treelap
