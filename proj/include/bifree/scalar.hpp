#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "bifree/rational.hpp"

namespace bifree {

// Scalar backends for the numeric kernels: exact rationals (default) and
// complex doubles (opt-in float mode, compared against a tolerance).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x, double /*tol*/ = 0.0) { return x == 0; }
  static double abs_approx(const Rational& x) { return std::fabs(x.get_d()); }
  static std::string str(const Rational& x) { return format_rational(x); }
  static Rational from_rational(const Rational& q) { return q; }
  static constexpr bool exact = true;
};

template <>
struct ScalarOps<std::complex<double>> {
  using C = std::complex<double>;
  static C zero() { return C(0.0, 0.0); }
  static C one() { return C(1.0, 0.0); }
  static bool is_zero(const C& x, double tol) { return std::abs(x) <= tol; }
  static double abs_approx(const C& x) { return std::abs(x); }
  static std::string str(const C& x) {
    std::ostringstream os;
    os << x.real();
    if (x.imag() != 0.0) os << (x.imag() > 0 ? "+" : "") << x.imag() << "i";
    return os.str();
  }
  static C from_rational(const Rational& q) { return C(q.get_d(), 0.0); }
  static constexpr bool exact = false;
};

}  // namespace bifree
