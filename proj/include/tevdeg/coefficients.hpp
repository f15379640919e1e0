#pragma once

#include <map>

#include "tevdeg/core.hpp"

namespace tevdeg {

/// The expansion T(ell, r) = sum_s coeffs[s] * E_s. Coefficients are the
/// refined path counts by index; zeros are omitted. Support lies in
/// [1, r - ell + 1], and in [3, r - ell + 1] once ell < 0.
struct Expansion {
  int ell = 0;
  int r = 1;
  std::map<int, Int> coeffs;
};

/// Closed form for the number of paths in P(ell, r) of index s.
///
/// Cases: ell = 0 is the Kronecker delta at s = r; (ell, r) = (-1, 1) is the
/// delta at s = 3 (the general formula's denominator vanishes there); all
/// remaining ell < 0 use the three-term binomial formula, whose division is
/// an exact cancellation.
inline Int c_coeff(int ell, int r, int s) {
  if (ell > 0 || r < 1) {
    throw std::invalid_argument("c_coeff: requires ell <= 0 and r >= 1");
  }
  if (ell == 0) {
    return s == r ? 1 : 0;
  }
  if (ell == -1 && r == 1) {
    return s == 3 ? 1 : 0;
  }
  const long long depth = -ell;
  if (s < 3 || s > r + depth + 1) {
    return 0;
  }
  const long long top = 2 * depth + r - s - 1;
  Int value =
      exact_div(Int(s - 2) * (s + r - 4) * binom(top, depth + 2 - s),
                depth - 2 + r) +
      binom(top, depth - 1) - binom(top, depth + r - 2);
  if (value < 0) {
    throw std::logic_error("c_coeff: negative path count at ell=" +
                           std::to_string(ell) + " r=" + std::to_string(r) +
                           " s=" + std::to_string(s));
  }
  return value;
}

/// Full expansion of T(ell, r) over the E_s basis, zero terms omitted.
inline Expansion expand(int ell, int r) {
  Expansion e{ell, r, {}};
  for (int s = 1; s <= r - ell + 1; ++s) {
    Int c = c_coeff(ell, r, s);
    if (c != 0) {
      e.coeffs.emplace(s, std::move(c));
    }
  }
  return e;
}

/// Closed form for the axis-to-axis refined count: the number of paths from
/// (0, 1) to (u2, 1) meeting the r = 1 axis exactly k times equals
/// C(-2*u2 - k, -u2 - k + 1) * (k - 1) / (-u2).
inline Int d_closed_axis(int k, int u2) {
  if (k < 2) {
    throw std::invalid_argument("d_closed_axis: requires k >= 2");
  }
  if (u2 >= 0) {
    throw std::invalid_argument("d_closed_axis: requires u2 < 0");
  }
  return exact_div(binom(-2LL * u2 - k, -u2 - k + 1) * (k - 1), -u2);
}

/// T(ell, 1)[1], i.e. the degree one genus step above the floor, by the
/// fixed-index closed form: the path count plus the total of return steps
/// plus the total of ell = 0 column visits over P(ell, 1).
inline Int t_ell1_j1(int ell) {
  if (ell >= 0) {
    throw std::invalid_argument("t_ell1_j1: requires ell < 0");
  }
  const long long depth = -ell;
  Int path_count = catalan(static_cast<int>(depth));
  Int return_steps =
      exact_div(3 * binom(2 * depth + 1, depth - 1), 2 * depth + 1);
  Int column_visits = exact_div(
      Int(4) * (2 * depth - 1) * (2 * depth + 1) *
          (binom(2 * depth - 2, depth - 1) - binom(2 * depth - 2, depth)),
      Int(depth + 1) * (depth + 2));
  return path_count + return_steps + column_visits;
}

}  // namespace tevdeg
