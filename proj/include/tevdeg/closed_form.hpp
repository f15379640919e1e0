#pragma once

#include "tevdeg/core.hpp"

namespace tevdeg {

namespace detail {

/// The master binomial formula evaluated without the validity gate.
/// Intermediate terms are signed (e.g. ell * C(g, -ell) is negative);
/// only callers assert the final sign. Exposed so tests can probe the
/// formula outside its stated domain.
inline Int closed_form_raw(int g, int ell, int r) {
  Int value = pow2(g);
  Int head = 0;
  for (int i = 0; i <= -ell - 2; ++i) {
    head += binom(g, i);
  }
  value -= 2 * head;
  if (r == 1) {
    value += Int(-ell - 2) * binom(g, -ell - 1) + Int(ell) * binom(g, -ell);
  } else {
    value += Int(-ell + r - 3) * binom(g, -ell - 1) +
             Int(ell - 1) * binom(g, -ell);
    for (int i = -ell + 1; i <= r - ell - 2; ++i) {
      value -= binom(g, i);
    }
  }
  return value;
}

}  // namespace detail

/// Degree by the master closed formulas, one for r = 1 and one for r > 1.
/// Invalid triples map to 0 before the formula is consulted.
inline Int tev_closed(const TevParams& p) {
  if (p.g < 0 || p.r < 1) {
    throw std::invalid_argument("tev_closed: need g >= 0 and r >= 1");
  }
  if (!is_valid(p)) {
    return 0;
  }
  Int value = detail::closed_form_raw(p.g, p.ell, p.r);
  if (value < 0) {
    throw std::logic_error("tev_closed: negative value at g=" +
                           std::to_string(p.g) + " ell=" +
                           std::to_string(p.ell) + " r=" +
                           std::to_string(p.r));
  }
  return value;
}

/// Specialized evaluation for ell >= 0, kept as independent redundancy for
/// the master formula: 2^g outright when ell >= r, otherwise the ell = 0
/// formula at the shifted fiber size r - ell.
inline Int tev_nonneg_ell(const TevParams& p) {
  if (p.ell < 0) {
    throw std::invalid_argument("tev_nonneg_ell: requires ell >= 0");
  }
  if (p.g < 0 || p.r < 1) {
    throw std::invalid_argument("tev_nonneg_ell: need g >= 0 and r >= 1");
  }
  if (!is_valid(p)) {
    return 0;
  }
  if (p.ell >= p.r) {
    return pow2(p.g);
  }
  Int value = pow2(p.g);
  for (int i = 0; i <= p.r - p.ell - 2; ++i) {
    value -= binom(p.g, i);
  }
  return value;
}

}  // namespace tevdeg
