// Command-line front end: exact Tevelev degree computation, expansion
// tables, path enumeration, and cross-method verification sweeps.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tevdeg/closed_form.hpp"
#include "tevdeg/format.hpp"
#include "tevdeg/lattice_paths.hpp"
#include "tevdeg/recursion.hpp"
#include "tevdeg/verify.hpp"

namespace {

void write_output(const std::string& out_file, const std::string& text) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + out_file);
  }
  out << text;
}

tevdeg::Int compute_tev(const tevdeg::TevParams& p, const std::string& method) {
  using namespace tevdeg;
  if (p.g < 0 || p.r < 1) {
    throw std::invalid_argument("need --g >= 0 and --r >= 1");
  }
  if (method == "recursion") {
    return tev_recursive(p);
  }
  if (method == "closed" || method == "auto") {
    return tev_closed(p);
  }
  if (method == "paths") {
    if (p.ell > 0) {
      throw std::invalid_argument("--method paths requires ell <= 0");
    }
    return is_valid(p) ? tev_via_paths(p) : Int(0);
  }
  throw std::invalid_argument("unknown method: " + method);
}

std::set<tevdeg::Method> parse_methods(const std::string& list) {
  std::set<tevdeg::Method> methods;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto m = tevdeg::method_from_name(name);
    if (!m) {
      throw std::invalid_argument("unknown method: " + name);
    }
    methods.insert(*m);
  }
  return methods;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact two-parameter Tevelev degree calculator"};
  app.require_subcommand(1);

  int rc = 0;

  // tev: one degree value.
  int g = 0, ell = 0, r = 1;
  std::string method = "auto";
  std::string out_file;
  auto* tev = app.add_subcommand("tev", "Compute one degree Tev(g, ell, r)");
  tev->add_option("--g", g, "genus (>= 0)")->required();
  tev->add_option("--ell", ell, "degree offset (any sign)")->required();
  tev->add_option("--r", r, "fiber marking count (>= 1)")->required();
  tev->add_option("--method", method,
                  "evaluation route: recursion|closed|paths|auto");
  tev->add_option("--out", out_file, "output file (default stdout)");
  tev->callback([&] {
    tevdeg::Int value = compute_tev(tevdeg::TevParams{g, ell, r}, method);
    write_output(out_file, value.str() + "\n");
  });

  // table: expansion table over a parameter window.
  int ell_min = -5, ell_max = -1, r_max = 5;
  std::string format = "pretty";
  auto* table = app.add_subcommand(
      "table", "Print expansions of T(ell, r) over the E_s basis");
  table->add_option("--ell-min", ell_min, "lowest ell (<= ell-max)");
  table->add_option("--ell-max", ell_max, "highest ell (<= 0)");
  table->add_option("--r-max", r_max, "highest r (>= 1)");
  table->add_option("--format", format, "pretty|json|csv");
  table->add_option("--out", out_file, "output file (default stdout)");
  table->callback([&] {
    auto cells = tevdeg::table_cells(ell_min, ell_max, r_max);
    if (format == "pretty") {
      write_output(out_file, tevdeg::render_table_pretty(cells));
    } else if (format == "json") {
      write_output(out_file, tevdeg::render_table_json(cells));
    } else if (format == "csv") {
      write_output(out_file, tevdeg::render_table_csv(cells));
    } else {
      throw std::invalid_argument("unknown format: " + format);
    }
  });

  // paths: exhaustive listing of P(ell, r) with statistics.
  auto* paths = app.add_subcommand(
      "paths", "List the paths from (0,1) to (ell, r) with index statistics");
  paths->add_option("--ell", ell, "target ell (<= 0)")->required();
  paths->add_option("--r", r, "target r (>= 1)")->required();
  paths->add_option("--format", format, "pretty|json|csv");
  paths->add_option("--out", out_file, "output file (default stdout)");
  paths->callback([&] {
    if (format == "pretty") {
      write_output(out_file, tevdeg::render_paths_pretty(ell, r));
    } else if (format == "json") {
      write_output(out_file, tevdeg::render_paths_json(ell, r));
    } else if (format == "csv") {
      write_output(out_file, tevdeg::render_paths_csv(ell, r));
    } else {
      throw std::invalid_argument("unknown format: " + format);
    }
  });

  // verify: cross-method sweep, JSON report, exit 1 on any disagreement.
  tevdeg::GridSpec grid;
  std::string methods = "recursion,closed,paths,expansion";
  bool inject_fault = false;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check all evaluation routes over a parameter grid");
  verify->add_option("--g-max", grid.g_max, "highest genus (default 12)");
  verify->add_option("--ell-min", grid.ell_min, "lowest ell (default -4)");
  verify->add_option("--ell-max", grid.ell_max, "highest ell (default 4)");
  verify->add_option("--r-max", grid.r_max, "highest r (default 5)");
  verify->add_option("--methods", methods,
                     "comma-separated subset of recursion,closed,paths,"
                     "expansion (at least two)");
  verify->add_flag("--inject-fault", inject_fault,
                   "self-test: perturb one value; the sweep must then fail");
  verify->add_option("--out", out_file, "output file (default stdout)");
  verify->callback([&] {
    grid.methods = parse_methods(methods);
    tevdeg::CheckReport report =
        tevdeg::cross_check(grid, tevdeg::CheckOptions{inject_fault});
    write_output(out_file, tevdeg::render_report_json(report));
    rc = report.passed() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
