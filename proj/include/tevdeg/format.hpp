#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "tevdeg/coefficients.hpp"
#include "tevdeg/lattice_paths.hpp"
#include "tevdeg/verify.hpp"

namespace tevdeg {

/// "28E3 + 32E4 + 21E5 + 8E6 + E7": terms ascending in s, zero terms
/// omitted, unit coefficients printed bare. An empty expansion is "0".
inline std::string format_expansion(const Expansion& e) {
  if (e.coeffs.empty()) {
    return "0";
  }
  std::string out;
  for (const auto& [s, coeff] : e.coeffs) {
    if (!out.empty()) {
      out += " + ";
    }
    if (coeff != 1) {
      out += coeff.str();
    }
    out += "E" + std::to_string(s);
  }
  return out;
}

/// The same cell string built from an index histogram instead of the
/// closed-form coefficients.
inline std::string format_index_histogram_as_expansion(
    int ell, int r, const std::map<int, Int>& histogram) {
  Expansion e{ell, r, {}};
  for (const auto& [s, count] : histogram) {
    if (count != 0) {
      e.coeffs.emplace(s, count);
    }
  }
  return format_expansion(e);
}

// ---------------------------------------------------------------------------
// Expansion tables. Cell order: ell descending from ell_max, r ascending.

inline std::vector<Expansion> table_cells(int ell_min, int ell_max,
                                          int r_max) {
  if (ell_max > 0 || ell_min > ell_max || r_max < 1) {
    throw std::invalid_argument(
        "table: need ell_min <= ell_max <= 0 and r_max >= 1");
  }
  std::vector<Expansion> cells;
  for (int ell = ell_max; ell >= ell_min; --ell) {
    for (int r = 1; r <= r_max; ++r) {
      cells.push_back(expand(ell, r));
    }
  }
  return cells;
}

inline std::string render_table_pretty(const std::vector<Expansion>& cells) {
  std::string out;
  for (const Expansion& e : cells) {
    out += "T(" + std::to_string(e.ell) + "," + std::to_string(e.r) +
           ") = " + format_expansion(e) + "\n";
  }
  return out;
}

inline nlohmann::json expansion_to_json(const Expansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, coeff] : e.coeffs) {
    terms.push_back({{"s", s}, {"coeff", coeff.str()}});
  }
  return {{"ell", e.ell}, {"r", e.r}, {"terms", terms}};
}

inline std::string render_table_json(const std::vector<Expansion>& cells) {
  nlohmann::json out;
  out["cells"] = nlohmann::json::array();
  for (const Expansion& e : cells) {
    out["cells"].push_back(expansion_to_json(e));
  }
  return out.dump(2) + "\n";
}

inline std::string render_table_csv(const std::vector<Expansion>& cells) {
  std::string out = "ell,r,s,coefficient\n";
  for (const Expansion& e : cells) {
    for (const auto& [s, coeff] : e.coeffs) {
      out += std::to_string(e.ell) + "," + std::to_string(e.r) + "," +
             std::to_string(s) + "," + coeff.str() + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path listings: every path as a quoted U/D string with its statistics,
// then the index histogram.

inline std::string render_paths_pretty(int ell, int r) {
  std::string out;
  for_each_path(ell, r, [&](std::string_view steps) {
    LatticePath p{Point{0, 1}, std::string(steps)};
    PathStats stats = path_stats(p);
    out += "\"" + p.steps + "\" index=" + std::to_string(stats.index) +
           " returns=" + std::to_string(stats.returns) + "\n";
  });
  auto histogram = count_paths_by_index(ell, r);
  out += "histogram:";
  for (const auto& [s, count] : histogram) {
    out += " " + std::to_string(s) + ":" + count.str();
  }
  out += "\n";
  return out;
}

inline std::string render_paths_json(int ell, int r) {
  nlohmann::json out;
  out["ell"] = ell;
  out["r"] = r;
  out["paths"] = nlohmann::json::array();
  for_each_path(ell, r, [&](std::string_view steps) {
    LatticePath p{Point{0, 1}, std::string(steps)};
    PathStats stats = path_stats(p);
    out["paths"].push_back({{"steps", p.steps},
                            {"index", stats.index},
                            {"returns", stats.returns}});
  });
  out["histogram"] = nlohmann::json::array();
  for (const auto& [s, count] : count_paths_by_index(ell, r)) {
    out["histogram"].push_back({{"index", s}, {"count", count.str()}});
  }
  return out.dump(2) + "\n";
}

inline std::string render_paths_csv(int ell, int r) {
  std::string out = "steps,index,returns\n";
  for_each_path(ell, r, [&](std::string_view steps) {
    LatticePath p{Point{0, 1}, std::string(steps)};
    PathStats stats = path_stats(p);
    out += p.steps + "," + std::to_string(stats.index) + "," +
           std::to_string(stats.returns) + "\n";
  });
  return out;
}

// ---------------------------------------------------------------------------
// Verification reports. All counts and degree values are serialized as
// decimal strings: they outgrow 64-bit JSON numbers, and string encoding
// spares consumers any precision loss.

inline nlohmann::json report_to_json(const CheckReport& report) {
  nlohmann::json out;
  out["cells_checked"] = std::to_string(report.cells_checked);
  out["mismatches"] = nlohmann::json::array();
  for (const Mismatch& m : report.mismatches) {
    nlohmann::json values;
    for (const auto& [method, value] : m.values) {
      values[std::string(method_name(method))] = value.str();
    }
    out["mismatches"].push_back({{"g", m.params.g},
                                 {"ell", m.params.ell},
                                 {"r", m.params.r},
                                 {"values", values}});
  }
  out["identity_failures"] = nlohmann::json::array();
  for (const IdentityFailure& f : report.identity_failures) {
    nlohmann::json witness(f.witness);
    out["identity_failures"].push_back({{"name", f.name},
                                        {"witness", witness}});
  }
  return out;
}

inline std::string render_report_json(const CheckReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace tevdeg
