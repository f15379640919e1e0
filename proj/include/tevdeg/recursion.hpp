#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>

#include "tevdeg/core.hpp"

namespace tevdeg {

/// Memo store for the boundary recursion. Lookups and insert-if-absent are
/// individually atomic, so any number of threads may evaluate concurrently;
/// racing threads may recompute a key, but values are deterministic and the
/// first stored entry wins.
class MemoTable {
 public:
  std::optional<Int> find(const TevParams& p) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(key(p));
    if (it == table_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  /// Stores value unless the key is already present; returns the stored value.
  Int insert_if_absent(const TevParams& p, Int value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = table_.emplace(key(p), std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

 private:
  static std::tuple<int, int, int> key(const TevParams& p) {
    return {p.g, p.ell, p.r};
  }

  mutable std::mutex mu_;
  std::map<std::tuple<int, int, int>, Int> table_;
};

/// Degree by the genus-lowering boundary recursion
///
///   Tev(g, ell, r) = Tev(g-1, ell, max(1, r-1)) + Tev(g-1, ell+1, r+1)
///
/// with Tev(0, ell, r) = 1 on valid triples and 0 on invalid ones (sub-calls
/// included). Depth is at most g. This route is deliberately independent of
/// the closed formulas and serves as their oracle.
inline Int tev_recursive(const TevParams& p, MemoTable& memo) {
  if (p.g < 0 || p.r < 1) {
    throw std::invalid_argument("tev_recursive: need g >= 0 and r >= 1");
  }
  if (!is_valid(p)) {
    return 0;
  }
  if (p.g == 0) {
    return 1;
  }
  if (auto hit = memo.find(p)) {
    return *hit;
  }
  Int value =
      tev_recursive(TevParams{p.g - 1, p.ell, p.r > 1 ? p.r - 1 : 1}, memo) +
      tev_recursive(TevParams{p.g - 1, p.ell + 1, p.r + 1}, memo);
  return memo.insert_if_absent(p, std::move(value));
}

inline Int tev_recursive(const TevParams& p) {
  MemoTable memo;
  return tev_recursive(p, memo);
}

}  // namespace tevdeg
