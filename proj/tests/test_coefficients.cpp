#include <catch2/catch_amalgamated.hpp>

#include "tevdeg/closed_form.hpp"
#include "tevdeg/coefficients.hpp"
#include "tevdeg/lattice_paths.hpp"

using namespace tevdeg;

TEST_CASE("coefficients reproduce pinned expansions") {
  CHECK(c_coeff(-3, 1, 4) == 2);
  CHECK(c_coeff(-3, 1, 5) == 3);
  CHECK(c_coeff(-4, 1, 4) == 4);
  CHECK(c_coeff(-4, 1, 5) == 6);
  CHECK(c_coeff(-4, 1, 6) == 4);
  CHECK(c_coeff(0, 4, 4) == 1);
  CHECK(c_coeff(0, 4, 3) == 0);
}

TEST_CASE("ell = -1 cases: delta clause at r = 1, general formula beyond") {
  CHECK(c_coeff(-1, 1, 3) == 1);
  CHECK(c_coeff(-1, 1, 2) == 0);
  CHECK(c_coeff(-1, 1, 4) == 0);
  // The general formula value, which enumeration confirms: P(-1, 2) holds
  // two paths, both of index 3.
  CHECK(c_coeff(-1, 2, 3) == 2);
  CHECK(count_paths_by_index(-1, 2) == std::map<int, Int>{{3, 2}});
}

TEST_CASE("coefficient support bounds") {
  for (int ell = -6; ell <= 0; ++ell) {
    for (int r = 1; r <= 6; ++r) {
      for (int s = -2; s <= r - ell + 4; ++s) {
        Int c = c_coeff(ell, r, s);
        if (s > r - ell + 1) {
          REQUIRE(c == 0);
        }
        if (ell < 0 && s < 3) {
          REQUIRE(c == 0);
        }
      }
    }
  }
  CHECK_THROWS_AS(c_coeff(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(c_coeff(0, 0, 1), std::invalid_argument);
}

TEST_CASE("expand matches pinned table cells") {
  CHECK(expand(-2, 3).coeffs == std::map<int, Int>{{3, 4}, {4, 4}, {5, 1}});
  CHECK(expand(0, 5).coeffs == std::map<int, Int>{{5, 1}});
  CHECK(expand(-5, 2).coeffs ==
        std::map<int, Int>{{3, 28}, {4, 42}, {5, 36}, {6, 20}, {7, 6}});
}

TEST_CASE("coefficients equal the brute-force index histogram") {
  for (int ell = -6; ell <= 0; ++ell) {
    for (int r = 1; r <= 6; ++r) {
      auto histogram = count_paths_by_index(ell, r);
      for (int s = 1; s <= r - ell + 1; ++s) {
        auto it = histogram.find(s);
        Int expected = it == histogram.end() ? Int(0) : it->second;
        REQUIRE(c_coeff(ell, r, s) == expected);
      }
    }
  }
}

TEST_CASE("coefficient totals count the whole path set") {
  for (int ell = -6; ell <= 0; ++ell) {
    for (int r = 1; r <= 6; ++r) {
      Int total = 0;
      for (const auto& [s, c] : expand(ell, r).coeffs) {
        total += c;
      }
      Int paths = 0;
      for_each_path(ell, r, [&](std::string_view) { ++paths; });
      REQUIRE(total == paths);
    }
  }
}

TEST_CASE("expansion reconstructs the degree column") {
  for (int ell = -6; ell <= 0; ++ell) {
    for (int r = 1; r <= 6; ++r) {
      const Expansion e = expand(ell, r);
      const int floor = TevParams{0, ell, r}.genus_floor();
      for (int j = 0; j <= 10; ++j) {
        Int value = 0;
        for (const auto& [s, c] : e.coeffs) {
          value += c * e_entry(s, j);
        }
        REQUIRE(value == tev_closed(TevParams{floor + j, ell, r}));
      }
    }
  }
}

TEST_CASE("axis-return closed form matches brute force") {
  CHECK(d_closed_axis(2, -3) == 2);
  CHECK(d_closed_axis(4, -3) == 1);
  Int total = 0;
  for (int k = 2; k <= 4; ++k) {
    total += d_closed_axis(k, -3);
  }
  CHECK(total == 5);
  for (int u2 = -8; u2 <= -1; ++u2) {
    for (int k = 2; k <= -u2 + 1; ++k) {
      REQUIRE(d_closed_axis(k, u2) == d_count(k, 0, 1, u2, 1));
    }
  }
  CHECK_THROWS_AS(d_closed_axis(1, -3), std::invalid_argument);
  CHECK_THROWS_AS(d_closed_axis(2, 0), std::invalid_argument);
}

TEST_CASE("fixed-index formula for the first step above the floor") {
  CHECK(t_ell1_j1(-1) == 4);
  CHECK(t_ell1_j1(-2) == 10);
  CHECK(t_ell1_j1(-3) == 28);
  for (int ell = -10; ell <= -1; ++ell) {
    const int floor = TevParams{0, ell, 1}.genus_floor();
    REQUIRE(t_ell1_j1(ell) == tev_closed(TevParams{floor + 1, ell, 1}));
    REQUIRE(t_ell1_j1(ell) == tev_via_paths(TevParams{floor + 1, ell, 1}));
  }
  CHECK_THROWS_AS(t_ell1_j1(0), std::invalid_argument);
  CHECK_THROWS_AS(t_ell1_j1(2), std::invalid_argument);
}

TEST_CASE("closed-form divisions stay exact over a wide window") {
  // Any nonzero remainder throws integrality_error, so evaluating widely is
  // itself the test.
  for (int ell = -12; ell <= 0; ++ell) {
    for (int r = 1; r <= 12; ++r) {
      for (int s = 1; s <= r - ell + 1; ++s) {
        REQUIRE_NOTHROW(c_coeff(ell, r, s));
      }
    }
  }
  for (int u2 = -12; u2 <= -1; ++u2) {
    for (int k = 2; k <= -u2 + 1; ++k) {
      REQUIRE_NOTHROW(d_closed_axis(k, u2));
    }
  }
  for (int ell = -16; ell <= -1; ++ell) {
    REQUIRE_NOTHROW(t_ell1_j1(ell));
  }
}
