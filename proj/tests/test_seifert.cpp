#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcyl/error.hpp"
#include "hcyl/pretzel.hpp"
#include "hcyl/seifert.hpp"
#include "oracles.hpp"

using namespace hcyl;

namespace {

const LaurentPoly kTrefoil(0, {1, -1, 1});

SeifertMatrix matrix(std::vector<std::vector<long>> rows) {
  IntMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return SeifertMatrix(std::move(m));
}

}  // namespace

TEST_CASE("SeifertMatrix shape validation") {
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{}), Error);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1}}), Error);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(SeifertMatrix(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), Error);
  CHECK(matrix({{1, 1}, {0, 1}}).genus() == 1);
}

TEST_CASE("integer determinant and rank") {
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
  CHECK(determinant({{1, 2}, {2, 4}}) == 0);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}}) == 3);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("determinant_poly") {
  CHECK(determinant_poly({{LaurentPoly(0, {1, -1})}}) == LaurentPoly(0, {1, -1}));
  CHECK(determinant_poly({{LaurentPoly(0, {1, -1}), LaurentPoly::constant(1)},
                          {LaurentPoly(1, {-1}), LaurentPoly(0, {1, -1})}}) == kTrefoil);
  const auto one = LaurentPoly::constant(1);
  const LaurentPoly zero;
  CHECK(determinant_poly({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == one);
  // Negative exponents survive the row shifts.
  CHECK(determinant_poly({{LaurentPoly(-2, {1}), zero}, {zero, LaurentPoly(-1, {1, 1})}}) ==
        LaurentPoly(-3, {1, 1}));
  CHECK(determinant_poly({{zero, zero}, {one, one}}).is_zero());
}

TEST_CASE("determinant_poly agrees with cofactor expansion on random matrices") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 4), lo(-2, 2), len(0, 3), coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(size(rng));
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    std::vector<std::vector<oracle::SparsePoly>> sparse(n, std::vector<oracle::SparsePoly>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const int low = lo(rng);
        std::vector<Integer> c(static_cast<std::size_t>(len(rng)));
        for (std::size_t k = 0; k < c.size(); ++k) {
          c[k] = coeff(rng);
          sparse[i][j][low + static_cast<long>(k)] = c[k];
        }
        sparse[i][j] = oracle::trim(sparse[i][j]);
        m[i][j] = LaurentPoly(low, std::move(c));
      }
    const LaurentPoly got = determinant_poly(m);
    const auto want = oracle::cofactor_det(sparse);
    LaurentPoly expected;
    for (const auto& [e, c] : want) expected = add(expected, LaurentPoly::monomial(c, e));
    CHECK(got == expected);
  }
}

TEST_CASE("alexander_from_seifert") {
  CHECK(alexander_from_seifert(matrix({{1, 1}, {0, 1}})) == kTrefoil);
  CHECK(alexander_from_seifert(matrix({{0, 1}, {0, 0}})) == LaurentPoly::constant(1));
  CHECK(alexander_from_seifert(pretzel_seifert_matrix(-1, 1, 1)) == kTrefoil);
  // Figure-eight knot.
  CHECK(alexander_from_seifert(matrix({{1, 1}, {0, -1}})) == LaurentPoly(0, {-1, 3, -1}));
  // Not a Seifert matrix of a knot: V - V^T = 0.
  try {
    alexander_from_seifert(matrix({{1, 0}, {0, 1}}));
    FAIL("expected NotUnitAtOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitAtOne);
  }
}

TEST_CASE("genus-2 Seifert matrices match cofactor expansion") {
  // Block sum of two trefoils: the connected sum.
  const std::vector<std::vector<long>> v = {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  const auto expected = oracle::alexander(v);
  const LaurentPoly got = alexander_from_seifert(matrix(v));
  CHECK(got == LaurentPoly(0, std::vector<Integer>(expected.begin(), expected.end())));
  CHECK(got == mul(kTrefoil, kTrefoil));
  CHECK(is_homology_product(matrix(v)));
}

TEST_CASE("pretzel_seifert_matrix") {
  CHECK(pretzel_seifert_matrix(0, 0, 0) == matrix({{1, 1}, {0, 1}}));
  CHECK(pretzel_seifert_matrix(-1, 1, 1) == matrix({{1, 2}, {1, 3}}));
  CHECK(pretzel_seifert_matrix(-2, 2, 8) == matrix({{1, 3}, {2, 11}}));
}

TEST_CASE("is_homology_product") {
  CHECK(is_homology_product(matrix({{1, 1}, {0, 1}})));
  CHECK_FALSE(is_homology_product(matrix({{0, 1}, {0, 0}})));
  CHECK(is_homology_product(pretzel_seifert_matrix(-1, 1, 1)));
  CHECK_FALSE(is_homology_product_via_alexander(matrix({{0, 1}, {0, 0}})));
}

TEST_CASE("Seifert route matches cofactor oracle and closed form on a pretzel sub-box") {
  for (long l = -6; l <= 6; ++l)
    for (long m = -6; m <= 6; ++m)
      for (long n = -6; n <= 6; ++n) {
        const auto v = pretzel_seifert_matrix(l, m, n);
        const auto expected = oracle::alexander({{l + m + 1, m + 1}, {m, m + n + 1}});
        const LaurentPoly got = alexander_from_seifert(v);
        CHECK(got == LaurentPoly(0, std::vector<Integer>(expected.begin(), expected.end())));
        CHECK(got == alexander_closed_form(PretzelKnot{l, m, n}));
        CHECK(is_homology_product(v) == is_homology_product_via_alexander(v));
      }
}
