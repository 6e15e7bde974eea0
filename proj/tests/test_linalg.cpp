#include <doctest.h>

#include "support/test_support.hpp"
#include "troplp/errors.hpp"
#include "troplp/linalg.hpp"

using namespace troplp;
using namespace troplp::testing;

TEST_CASE("permanent of small matrices") {
  SUBCASE("1x1 positive") {
    PermanentResult p = tropical_permanent(matrix_of({{pos(7)}}));
    CHECK(p.value == fin(7));
    CHECK(p.unique);
    CHECK(p.sign == 1);
    CHECK(*p.optimal_permutation == std::vector<int>{0});
  }
  SUBCASE("diagonal pattern") {
    PermanentResult p = tropical_permanent(matrix_of({{pos(0), none()}, {none(), pos(0)}}));
    CHECK(p.value == fin(0));
    CHECK(p.unique);
    CHECK(p.sign == 1);
    CHECK(*p.optimal_permutation == std::vector<int>{0, 1});
  }
  SUBCASE("negative entry on the optimal diagonal") {
    PermanentResult p = tropical_permanent(matrix_of({{neg(2), pos(1)}, {pos(1), pos(2)}}));
    CHECK(p.value == fin(4));
    CHECK(p.unique);
    CHECK(p.sign == -1);
  }
  SUBCASE("tied permutations") {
    PermanentResult p = tropical_permanent(matrix_of({{pos(0), pos(0)}, {pos(0), pos(0)}}));
    CHECK(p.value == fin(0));
    CHECK_FALSE(p.unique);
    CHECK(p.degenerate());
    CHECK(p.sign == 0);
  }
  SUBCASE("all-bottom row") {
    PermanentResult p = tropical_permanent(matrix_of({{none(), none()}, {pos(1), pos(2)}}));
    CHECK(p.value == bot());
    CHECK(p.sign == 0);
    CHECK_FALSE(p.optimal_permutation.has_value());
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(tropical_permanent(matrix_of({{pos(1), pos(2)}})), Error);
  }
}

TEST_CASE("permanent matches exhaustive enumeration") {
  Rng rng(20250101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng.integer(1, 6));
    SignedMatrix m = rng.signed_matrix(n, n, 0.2, -6, 6);
    BrutePermanent expected = brute_permanent(m);
    PermanentResult got = tropical_permanent(m);
    CHECK(got.value == expected.value);
    CHECK(got.unique == (expected.argmax_count == 1));
    if (expected.argmax_count == 1) {
      CHECK(got.sign == expected.sign);
      CHECK(*got.optimal_permutation == *expected.permutation);
    }
  }
}

TEST_CASE("cramer solving") {
  SUBCASE("1x1 with negative constant") {
    auto x = tropical_cramer(matrix_of({{pos(2)}}), {neg(5)});
    CHECK(x[0] == pos(3));
  }
  SUBCASE("1x1 with positive constant") {
    auto x = tropical_cramer(matrix_of({{pos(2)}}), {pos(5)});
    CHECK(x[0] == neg(3));
  }
  SUBCASE("decoupled equations") {
    auto x = tropical_cramer(matrix_of({{pos(0), none()}, {none(), pos(0)}}), {neg(4), neg(9)});
    CHECK(x[0] == pos(4));
    CHECK(x[1] == pos(9));
  }
  SUBCASE("bottom numerator gives a bottom coordinate") {
    auto x = tropical_cramer(matrix_of({{pos(0), none()}, {none(), pos(0)}}), {neg(4), none()});
    CHECK(x[0] == pos(4));
    CHECK(x[1] == none());
  }
  SUBCASE("singular and degenerate inputs") {
    CHECK_THROWS_AS(tropical_cramer(matrix_of({{none()}}), {pos(1)}), SingularityError);
    CHECK_THROWS_AS(
        tropical_cramer(matrix_of({{pos(0), pos(0)}, {pos(0), pos(0)}}), {pos(1), pos(1)}),
        DegeneracyError);
    CHECK_THROWS_AS(
        tropical_cramer(matrix_of({{pos(0), pos(0)}, {none(), pos(0)}}), {pos(0), pos(0)}),
        DegeneracyError);  // substituted column ties
  }
}

TEST_CASE("cramer residual activates every row") {
  Rng rng(555);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 60; ++trial) {
    int n = static_cast<int>(rng.integer(1, 4));
    SignedMatrix a = rng.signed_matrix(n, n, 0.25, -9, 9);
    std::vector<SignedTropical> b;
    for (int i = 0; i < n; ++i) b.push_back(rng.signed_entry(0.25, -9, 9));
    std::vector<SignedTropical> x;
    try {
      x = tropical_cramer(a, b);
    } catch (const Error&) {
      continue;
    }
    bool positive = true;
    std::vector<Tropical> point;
    for (const auto& xi : x) {
      positive = positive && xi.sign() > 0;
      point.push_back(xi.modulus());
    }
    if (!positive) continue;
    ++checked;
    for (int i = 0; i < n; ++i) {
      SignedRow row;
      for (int j = 0; j < n; ++j) row.coeffs.push_back(a.at(i, j));
      row.constant = b[static_cast<std::size_t>(i)];
      CHECK(eval_row(row, point).status == RowStatus::active);
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("minor sign oracle") {
  SignedMatrix m = matrix_of({{neg(2), pos(1)}, {pos(1), pos(2)}});
  CHECK(minor_sign_oracle(m, {0}, {0}) == -1);
  CHECK(minor_sign_oracle(m, {0}, {1}) == 1);
  CHECK(minor_sign_oracle(m, {0, 1}, {0, 1}) == -1);
  SignedMatrix z = matrix_of({{none(), none()}, {pos(1), pos(2)}});
  CHECK(minor_sign_oracle(z, {0, 1}, {0, 1}) == 0);
  CHECK(minor_sign_oracle(z, {0}, {1}) == 0);
  SignedMatrix tied = matrix_of({{pos(0), pos(0)}, {pos(0), pos(0)}});
  CHECK_THROWS_AS(minor_sign_oracle(tied, {0, 1}, {0, 1}), DegeneracyError);
  CHECK_THROWS_AS(minor_sign_oracle(m, {}, {}), Error);
}

TEST_CASE("genericity checker") {
  CHECK_FALSE(is_tropically_generic(matrix_of({{pos(0), pos(0)}, {pos(0), pos(0)}})));
  CHECK(is_tropically_generic(matrix_of({{pos(1), none()}, {none(), pos(1)}})));
  auto witness = find_degenerate_submatrix(matrix_of({{pos(0), pos(0)}, {pos(0), pos(0)}}));
  REQUIRE(witness.has_value());
  CHECK(witness->first.size() == witness->second.size());

  SUBCASE("size guard") {
    Rng rng(1);
    SignedMatrix big = rng.signed_matrix(13, 2, 0.0);
    CHECK_THROWS_AS(is_tropically_generic(big), SizeGuardError);
    GenericityLimits wide;
    wide.max_dim = 20;
    CHECK_NOTHROW(is_tropically_generic(big, wide));
  }
}

TEST_CASE("uniqueness flag agrees with counting argmax permutations") {
  Rng rng(777);
  for (int trial = 0; trial < 250; ++trial) {
    int n = static_cast<int>(rng.integer(1, 5));
    // Coarse moduli make ties common.
    SignedMatrix m = rng.signed_matrix(n, n, 0.3, -1, 1);
    BrutePermanent expected = brute_permanent(m);
    PermanentResult got = tropical_permanent(m);
    if (expected.value.is_bottom())
      CHECK(got.value.is_bottom());
    else
      CHECK(got.unique == (expected.argmax_count == 1));
  }
}
