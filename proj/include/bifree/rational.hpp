#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace bifree {

using Rational = mpq_class;
using Integer = mpz_class;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "p", "-p/q" or a decimal integer string into a canonical rational.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string format_rational(const Rational& q) {
  return q.get_str();
}

/// C_0..C_n by the convolution recurrence C_{k+1} = sum C_i C_{k-i}.
inline std::vector<Integer> catalan_numbers(int n) {
  std::vector<Integer> c(static_cast<size_t>(n) + 1);
  c[0] = 1;
  for (int k = 0; k < n; ++k) {
    Integer acc = 0;
    for (int i = 0; i <= k; ++i) acc += c[i] * c[k - i];
    c[k + 1] = acc;
  }
  return c;
}

inline Integer catalan(int n) { return catalan_numbers(n).back(); }

}  // namespace bifree
