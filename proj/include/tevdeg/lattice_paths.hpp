#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tevdeg/core.hpp"

namespace tevdeg {

/// A lattice point of the quadrant A = { (ell, r) : ell <= 0, r >= 1 }.
/// The boundary of A is the union of the lines r = 1 and ell = 0.
struct Point {
  int ell = 0;
  int r = 1;

  bool in_quadrant() const { return ell <= 0 && r >= 1; }
  bool on_boundary() const { return r == 1 || ell == 0; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// A path inside A taking steps U = (0, 1) and D = (-1, -1), stored as a
/// step string over {'U', 'D'}. The empty step string is the legal
/// degenerate path consisting of the start point alone.
struct LatticePath {
  Point start{0, 1};
  std::string steps;

  Point end() const {
    Point cur = start;
    for (char c : steps) {
      cur = c == 'U' ? Point{cur.ell, cur.r + 1} : Point{cur.ell - 1, cur.r - 1};
    }
    return cur;
  }

  /// Visited points in order, start first. A path never revisits a point:
  /// ell is non-increasing and r strictly increases while ell is constant.
  std::vector<Point> points() const {
    std::vector<Point> pts;
    pts.reserve(steps.size() + 1);
    Point cur = start;
    pts.push_back(cur);
    for (char c : steps) {
      cur = c == 'U' ? Point{cur.ell, cur.r + 1} : Point{cur.ell - 1, cur.r - 1};
      pts.push_back(cur);
    }
    return pts;
  }
};

/// index: visited points lying on the boundary of A, counted per visit
/// (the corner (0, 1) lies on both boundary lines but is one point, so it
/// counts once). returns: D steps whose endpoint lands on the line r = 1.
struct PathStats {
  int index = 0;
  int returns = 0;
};

/// Exhaustive enumeration refuses cells beyond this: path counts grow like
/// Catalan numbers, and the closed forms cover larger parameters.
inline constexpr int kEnumerationGuard = 40;

namespace detail {

inline void check_target(int ell, int r) {
  if (ell > 0 || r < 1) {
    throw std::invalid_argument(
        "path enumeration: target must satisfy ell <= 0 and r >= 1");
  }
  if (-ell + r > kEnumerationGuard) {
    throw std::invalid_argument(
        "path enumeration: |ell| + r exceeds the exhaustive-mode guard (" +
        std::to_string(kEnumerationGuard) + ")");
  }
}

// DFS over step interleavings, U before D so emission order is
// lexicographic with U < D. A D step is feasible only from r >= 2, and any
// feasible prefix extends to a full path, so there are no dead ends.
template <typename Fn>
void walk(std::string& steps, int r, int ups_left, int downs_left, Fn& fn) {
  if (ups_left == 0 && downs_left == 0) {
    fn(std::string_view(steps));
    return;
  }
  if (ups_left > 0) {
    steps.push_back('U');
    walk(steps, r + 1, ups_left - 1, downs_left, fn);
    steps.pop_back();
  }
  if (downs_left > 0 && r >= 2) {
    steps.push_back('D');
    walk(steps, r - 1, ups_left, downs_left - 1, fn);
    steps.pop_back();
  }
}

}  // namespace detail

/// Visits every path of P(ell, r) — from (0, 1) to (ell, r) inside A — as a
/// step string, in lexicographic order with U < D. A path to (ell, r) has
/// exactly |ell| D steps and |ell| + r - 1 U steps.
template <typename Fn>
void for_each_path(int ell, int r, Fn fn) {
  detail::check_target(ell, r);
  const int downs = -ell;
  const int ups = downs + r - 1;
  std::string steps;
  steps.reserve(static_cast<std::size_t>(ups + downs));
  detail::walk(steps, 1, ups, downs, fn);
}

inline std::vector<LatticePath> enumerate_paths(int ell, int r) {
  std::vector<LatticePath> paths;
  for_each_path(ell, r, [&](std::string_view steps) {
    paths.push_back(LatticePath{Point{0, 1}, std::string(steps)});
  });
  return paths;
}

inline PathStats path_stats(const LatticePath& p) {
  PathStats stats;
  Point cur = p.start;
  if (cur.on_boundary()) {
    ++stats.index;
  }
  for (char c : p.steps) {
    cur = c == 'U' ? Point{cur.ell, cur.r + 1} : Point{cur.ell - 1, cur.r - 1};
    if (cur.on_boundary()) {
      ++stats.index;
    }
    if (c == 'D' && cur.r == 1) {
      ++stats.returns;
    }
  }
  return stats;
}

/// Histogram of path index over P(ell, r); keys lie in [1, r - ell + 1].
inline std::map<int, Int> count_paths_by_index(int ell, int r) {
  std::map<int, Int> histogram;
  for_each_path(ell, r, [&](std::string_view steps) {
    LatticePath p{Point{0, 1}, std::string(steps)};
    ++histogram[path_stats(p).index];
  });
  return histogram;
}

/// Degree as a sum over paths: Tev(gfloor + j, ell, r) is the sum of
/// E_index(path)[j] over P(ell, r). Brute-force oracle for both the master
/// formula and the coefficient expansion.
inline Int tev_via_paths(const TevParams& p) {
  if (p.ell > 0 || p.r < 1) {
    throw std::invalid_argument("tev_via_paths: requires ell <= 0 and r >= 1");
  }
  const int floor = p.genus_floor();
  if (p.g < floor) {
    throw std::invalid_argument(
        "tev_via_paths: g below the genus floor (value is 0 by validity; "
        "map through is_valid first)");
  }
  const long long j = p.g - floor;
  Int total = 0;
  for (const auto& [index, count] : count_paths_by_index(p.ell, p.r)) {
    total += count * e_entry(index, j);
  }
  return total;
}

/// Histogram, over all U/D paths in A from one point to another, of how many
/// visited points lie on the line r = 1 (start and end included when they
/// sit on the line). Empty when the end is unreachable.
inline std::map<int, Int> axis_hit_histogram(Point from, Point to) {
  if (!from.in_quadrant() || !to.in_quadrant()) {
    throw std::invalid_argument("axis_hit_histogram: points must lie in A");
  }
  std::map<int, Int> histogram;
  const int downs = from.ell - to.ell;
  const int ups = (to.r - from.r) + downs;
  if (downs < 0 || ups < 0) {
    return histogram;
  }
  if (ups + downs > 2 * kEnumerationGuard) {
    throw std::invalid_argument(
        "axis_hit_histogram: path length exceeds the exhaustive-mode guard");
  }
  // A point with r = 1 is entered only by a D step (or is the start), so
  // counting D landings plus the start suffices.
  const int start_hit = from.r == 1 ? 1 : 0;
  struct Rec {
    std::map<int, Int>& histogram;
    void operator()(int r, int hits, int ups_left, int downs_left) {
      if (ups_left == 0 && downs_left == 0) {
        ++histogram[hits];
        return;
      }
      if (ups_left > 0) {
        (*this)(r + 1, hits, ups_left - 1, downs_left);
      }
      if (downs_left > 0 && r >= 2) {
        (*this)(r - 1, hits + (r == 2 ? 1 : 0), ups_left, downs_left - 1);
      }
    }
  } rec{histogram};
  rec(from.r, start_hit, ups, downs);
  return histogram;
}

/// Number of paths in A from (u, v) to (u2, v2) meeting the r = 1 axis
/// exactly k times, by exhaustive enumeration. 0 when unreachable.
inline Int d_count(int k, int u, int v, int u2, int v2) {
  auto histogram = axis_hit_histogram(Point{u, v}, Point{u2, v2});
  auto it = histogram.find(k);
  return it == histogram.end() ? Int(0) : it->second;
}

}  // namespace tevdeg
