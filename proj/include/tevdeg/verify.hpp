#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tevdeg/closed_form.hpp"
#include "tevdeg/coefficients.hpp"
#include "tevdeg/core.hpp"
#include "tevdeg/lattice_paths.hpp"
#include "tevdeg/recursion.hpp"

namespace tevdeg {

enum class Method { recursion, closed, paths, expansion };

inline constexpr std::string_view method_name(Method m) {
  switch (m) {
    case Method::recursion:
      return "recursion";
    case Method::closed:
      return "closed";
    case Method::paths:
      return "paths";
    case Method::expansion:
      return "expansion";
  }
  return "unknown";
}

inline std::optional<Method> method_from_name(std::string_view name) {
  for (Method m : {Method::recursion, Method::closed, Method::paths,
                   Method::expansion}) {
    if (method_name(m) == name) {
      return m;
    }
  }
  return std::nullopt;
}

/// Parameter grid for a cross-validation sweep. Every triple with
/// 0 <= g <= g_max, ell_min <= ell <= ell_max, 1 <= r <= r_max is visited,
/// invalid ones included (each method must map those to 0).
struct GridSpec {
  int g_max = 12;
  int ell_min = -4;
  int ell_max = 4;
  int r_max = 5;
  std::set<Method> methods = {Method::recursion, Method::closed, Method::paths,
                              Method::expansion};
};

struct Mismatch {
  TevParams params;
  std::vector<std::pair<Method, Int>> values;
};

struct IdentityFailure {
  std::string name;
  std::map<std::string, std::string> witness;
};

struct CheckReport {
  long long cells_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<IdentityFailure> identity_failures;

  bool passed() const {
    return mismatches.empty() && identity_failures.empty();
  }
};

struct CheckOptions {
  /// Self-test hook: perturb the first compared value of the sweep by one,
  /// which a healthy harness must report as a mismatch.
  bool inject_fault = false;
};

namespace detail {

class IdentitySuite {
 public:
  explicit IdentitySuite(CheckReport& report) : report_(report) {}

  /// Records the first failing witness per identity and moves on.
  void check(const std::string& name, bool ok,
             std::map<std::string, std::string> witness) {
    if (!ok && !failed_.count(name)) {
      failed_.insert(name);
      report_.identity_failures.push_back({name, std::move(witness)});
    }
  }

  bool already_failed(const std::string& name) const {
    return failed_.count(name) != 0;
  }

 private:
  CheckReport& report_;
  std::set<std::string> failed_;
};

class AxisHistogramCache {
 public:
  const std::map<int, Int>& get(int u, int v, int u2, int v2) {
    auto key = std::tuple{u, v, u2, v2};
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, axis_hit_histogram(Point{u, v}, Point{u2, v2}))
               .first;
    }
    return it->second;
  }

  Int count(int k, int u, int v, int u2, int v2) {
    const auto& histogram = get(u, v, u2, v2);
    auto it = histogram.find(k);
    return it == histogram.end() ? Int(0) : it->second;
  }

 private:
  std::map<std::tuple<int, int, int, int>, std::map<int, Int>> cache_;
};

inline std::map<std::string, std::string> int_witness(
    std::initializer_list<std::pair<std::string, long long>> fields) {
  std::map<std::string, std::string> w;
  for (const auto& [k, v] : fields) {
    w.emplace(k, std::to_string(v));
  }
  return w;
}

// Fixed, pinned ranges for the named identity checks. These bounds are the
// acceptance thresholds, not tunables.
inline constexpr int kPascalMaxS = 40;
inline constexpr int kPascalMaxJ = 40;
inline constexpr int kCatalanMax = 10;
inline constexpr int kFullFiberMaxEll = 6;
inline constexpr int kFullFiberMaxG = 20;
inline constexpr int kAxisCoordBound = 6;   // |u|, |u2|, v, v2 for (i)-(iii)
inline constexpr int kAxisHitBound = 8;     // k for (i)-(iii)
inline constexpr int kAxisClosedDepth = 8;  // |u2| for the closed form
inline constexpr int kIndexSweepBound = 7;  // |ell|, r for path statistics

inline void run_identity_suites(CheckReport& report) {
  IdentitySuite suite(report);
  AxisHistogramCache axis;

  // Pascal-type addition law and unit leading components of the E vectors.
  for (int s = 1; s <= kPascalMaxS; ++s) {
    suite.check("e_leading_one", e_entry(s, 0) == 1,
                int_witness({{"s", s}}));
    for (int j = 0; j <= kPascalMaxJ; ++j) {
      bool ok = e_entry(s + 1, j + 1) == e_entry(s + 1, j) + e_entry(s, j + 1);
      suite.check("e_pascal_law", ok, int_witness({{"s", s}, {"j", j}}));
    }
  }

  // Dyck path counts are Catalan numbers, and so is the closed-form degree
  // at the bottom of each r = 1 column.
  for (int m = 0; m <= kCatalanMax; ++m) {
    Int expected = catalan(m);
    Int paths = 0;
    for_each_path(-m, 1, [&](std::string_view) { ++paths; });
    suite.check("catalan_path_count", paths == expected,
                int_witness({{"m", m}}));
    suite.check("catalan_degree",
                tev_closed(TevParams{2 * m, -m, 1}) == expected,
                int_witness({{"m", m}}));
  }

  // Constraining a full fiber normalizes the degree to 1.
  for (int ell = 0; ell <= kFullFiberMaxEll; ++ell) {
    for (int g = 0; g <= kFullFiberMaxG; ++g) {
      TevParams p{g, ell, g + 1 + ell};
      if (!is_valid(p)) {
        continue;
      }
      suite.check("full_fiber_normalization", tev_closed(p) == 1,
                  int_witness({{"g", g}, {"ell", ell}}));
    }
  }

  // Refined axis-meeting counts: translation invariance, U/D exchange
  // symmetry, shifting out leading axis visits, and the closed form on the
  // axis-to-axis case.
  for (int u = -kAxisCoordBound; u <= 0; ++u) {
    for (int v = 1; v <= kAxisCoordBound; ++v) {
      for (int u2 = -kAxisCoordBound; u2 <= 0; ++u2) {
        for (int v2 = 1; v2 <= kAxisCoordBound; ++v2) {
          for (int k = 0; k <= kAxisHitBound; ++k) {
            Int base = axis.count(k, u, v, u2, v2);
            // Translation needs u2 <= u so both shifted points stay in A.
            if (u2 <= u && !suite.already_failed("d_translation_invariance")) {
              for (int j = -3; j <= -u; ++j) {
                bool ok = axis.count(k, u + j, v, u2 + j, v2) == base;
                suite.check(
                    "d_translation_invariance", ok,
                    int_witness({{"k", k}, {"u", u}, {"v", v}, {"u2", u2},
                                 {"v2", v2}, {"j", j}}));
                if (!ok) {
                  break;
                }
              }
            }
            if (u == 0 && v == 1) {
              bool ok = axis.count(k, 0, v2, u2 - v2 + 1, 1) == base;
              suite.check("d_step_swap_symmetry", ok,
                          int_witness({{"k", k}, {"u2", u2}, {"v2", v2}}));
            }
            if (!suite.already_failed("d_axis_visit_shift")) {
              for (int t = 1; t < k; ++t) {
                bool ok = axis.count(k - t, u, v + t, u2, v2) == base;
                suite.check(
                    "d_axis_visit_shift", ok,
                    int_witness({{"k", k}, {"t", t}, {"u", u}, {"v", v},
                                 {"u2", u2}, {"v2", v2}}));
                if (!ok) {
                  break;
                }
              }
            }
          }
        }
      }
    }
  }
  for (int u2 = -kAxisClosedDepth; u2 <= -1; ++u2) {
    for (int k = 2; k <= -u2 + 1; ++k) {
      bool ok = false;
      std::map<std::string, std::string> witness =
          int_witness({{"k", k}, {"u2", u2}});
      try {
        ok = (d_closed_axis(k, u2) == axis.count(k, 0, 1, u2, 1));
      } catch (const integrality_error& e) {
        ok = false;
        witness.emplace("error", e.what());
      }
      suite.check("d_axis_closed_form", ok, std::move(witness));
    }
  }

  // Index statistics: bounds and the decomposition into return steps plus
  // visits to the ell = 0 column.
  for (int ell = -kIndexSweepBound; ell <= 0; ++ell) {
    for (int r = 1; r <= kIndexSweepBound; ++r) {
      if (suite.already_failed("index_bounds") &&
          suite.already_failed("index_decomposition")) {
        break;
      }
      for_each_path(ell, r, [&](std::string_view steps) {
        LatticePath path{Point{0, 1}, std::string(steps)};
        PathStats stats = path_stats(path);
        bool bounds_ok = stats.index >= 1 && stats.index <= r - ell + 1 &&
                         (ell >= 0 || stats.index >= 3);
        int column_visits = 0;
        for (const Point& pt : path.points()) {
          if (pt.ell == 0) {
            ++column_visits;
          }
        }
        bool decomposition_ok = stats.index == stats.returns + column_visits;
        auto witness = int_witness({{"ell", ell}, {"r", r}});
        witness.emplace("steps", std::string(steps));
        suite.check("index_bounds", bounds_ok, witness);
        suite.check("index_decomposition", decomposition_ok, witness);
      });
    }
  }
}

}  // namespace detail

/// Evaluates every grid triple under each selected applicable method,
/// records disagreements, and runs the named identity suites. Failures are
/// data: the sweep never aborts early, and the report is assembled in
/// (g, ell, r) order so identical inputs give identical reports.
inline CheckReport cross_check(const GridSpec& spec,
                               const CheckOptions& options = {}) {
  if (spec.g_max < 0 || spec.ell_min > spec.ell_max || spec.r_max < 1) {
    throw std::invalid_argument("cross_check: malformed grid");
  }
  if (spec.methods.size() < 2) {
    throw std::invalid_argument("cross_check: need at least two methods");
  }

  CheckReport report;
  MemoTable memo;
  std::map<std::pair<int, int>, std::map<int, Int>> index_histograms;
  std::map<std::pair<int, int>, Expansion> expansions;
  bool fault_pending = options.inject_fault;

  auto paths_applicable = [](const TevParams& p) {
    return p.ell <= 0 && -p.ell + p.r <= kEnumerationGuard;
  };

  for (int g = 0; g <= spec.g_max; ++g) {
    for (int ell = spec.ell_min; ell <= spec.ell_max; ++ell) {
      for (int r = 1; r <= spec.r_max; ++r) {
        const TevParams p{g, ell, r};
        ++report.cells_checked;
        std::vector<std::pair<Method, Int>> values;
        for (Method m : spec.methods) {
          switch (m) {
            case Method::recursion:
              values.emplace_back(m, tev_recursive(p, memo));
              break;
            case Method::closed:
              values.emplace_back(m, tev_closed(p));
              break;
            case Method::paths: {
              if (!paths_applicable(p)) {
                break;
              }
              Int value = 0;
              if (is_valid(p)) {
                auto key = std::pair{ell, r};
                auto it = index_histograms.find(key);
                if (it == index_histograms.end()) {
                  it = index_histograms
                           .emplace(key, count_paths_by_index(ell, r))
                           .first;
                }
                const long long j = g - p.genus_floor();
                for (const auto& [s, count] : it->second) {
                  value += count * e_entry(s, j);
                }
              }
              values.emplace_back(m, std::move(value));
              break;
            }
            case Method::expansion: {
              if (p.ell > 0) {
                break;
              }
              Int value = 0;
              if (is_valid(p)) {
                auto key = std::pair{ell, r};
                auto it = expansions.find(key);
                if (it == expansions.end()) {
                  it = expansions.emplace(key, expand(ell, r)).first;
                }
                const long long j = g - p.genus_floor();
                for (const auto& [s, coeff] : it->second.coeffs) {
                  value += coeff * e_entry(s, j);
                }
              }
              values.emplace_back(m, std::move(value));
              break;
            }
          }
        }
        if (fault_pending && values.size() >= 2) {
          values.front().second += 1;
          fault_pending = false;
        }
        bool agree = true;
        for (std::size_t i = 1; i < values.size(); ++i) {
          if (values[i].second != values.front().second) {
            agree = false;
            break;
          }
        }
        if (!agree) {
          report.mismatches.push_back({p, std::move(values)});
        }
      }
    }
  }

  detail::run_identity_suites(report);
  return report;
}

}  // namespace tevdeg
