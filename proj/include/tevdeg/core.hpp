#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace tevdeg {

/// Exact signed integer of unbounded size. Degree values grow like 2^g,
/// so fixed-width types are not an option; everything in this library is
/// computed exactly, never in floating point.
using Int = boost::multiprecision::cpp_int;

/// Thrown when a closed formula's exact division leaves a remainder.
/// A nonzero remainder means the formula was transcribed wrong, so this
/// is a bug signal rather than a data error.
class integrality_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Quotient of num/den, throwing integrality_error unless den divides num.
inline Int exact_div(const Int& num, const Int& den) {
  if (den == 0) {
    throw integrality_error("exact_div: zero denominator");
  }
  Int q, rem;
  divide_qr(num, den, q, rem);
  if (rem != 0) {
    throw integrality_error("exact_div: " + num.str() + " not divisible by " +
                            den.str());
  }
  return q;
}

/// 2^e for e >= 0.
inline Int pow2(long long e) {
  if (e < 0) {
    throw std::invalid_argument("pow2: negative exponent");
  }
  return Int(1) << e;
}

/// A parameter triple (g, ell, r) naming one degree. Genus g >= 0 and
/// r >= 1; ell may have any sign.
struct TevParams {
  int g = 0;
  int ell = 0;
  int r = 1;

  /// Degree of the covers being counted: d = g + 1 + ell.
  int degree() const { return g + 1 + ell; }
  /// Number of markings: n = g + 3 + 2*ell.
  int markings() const { return g + 3 + 2 * ell; }
  /// Smallest genus for which (g, ell, r) is admissible: r - 2*ell - 1.
  int genus_floor() const { return r - 2 * ell - 1; }

  friend auto operator<=>(const TevParams&, const TevParams&) = default;
};

/// Binomial coefficient C(n, k) with the zero-extension convention:
/// the value is 0 whenever k < 0, k > n, or n < 0. Every formula in this
/// library relies on that convention uniformly.
inline Int binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  if (n - k < k) {
    k = n - k;
  }
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

/// Component j of the building-block vector E_s (s >= 1):
///
///   E_s[j] = 2^(s+j-1) - sum_{i=0}^{s-2} C(s+j-1, i)   for j >= 0,
///   E_s[j] = 0                                          for j < 0.
///
/// E_1 = (1, 2, 4, 8, ...), E_2 = (1, 3, 7, 15, ...), E_3 = (1, 4, 11, ...).
inline Int e_entry(int s, long long j) {
  if (s < 1) {
    throw std::invalid_argument("e_entry: vector index s must be >= 1");
  }
  if (j < 0) {
    return 0;
  }
  Int value = pow2(s + j - 1);
  for (int i = 0; i <= s - 2; ++i) {
    value -= binom(s + j - 1, i);
  }
  return value;
}

/// Whether the triple admits a nonzero degree: 1 <= r <= g+1+ell and
/// g >= r - 2*ell - 1. Outside this domain the degree is 0 by definition.
inline bool is_valid(const TevParams& p) {
  return p.g >= 0 && p.r >= 1 && p.r <= p.degree() && p.g >= p.genus_floor();
}

/// The m-th Catalan number C(2m, m) / (m+1).
inline Int catalan(int m) {
  if (m < 0) {
    throw std::invalid_argument("catalan: index must be >= 0");
  }
  return exact_div(binom(2LL * m, m), m + 1);
}

}  // namespace tevdeg
