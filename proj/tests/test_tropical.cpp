#include <doctest.h>

#include "support/test_support.hpp"
#include "troplp/errors.hpp"
#include "troplp/tropical.hpp"

using namespace troplp;
using namespace troplp::testing;

TEST_CASE("tropical addition and multiplication") {
  CHECK(trop_add(fin(3), fin(5)) == fin(5));
  CHECK(trop_mul(fin(3), bot()) == bot());
  CHECK(trop_mul(bot(), fin(3)) == bot());
  CHECK(trop_add(bot(), fin(3)) == fin(3));
  CHECK(trop_mul(Tropical(gv({0, 2})), Tropical(gv({-1, 1}))) == Tropical(gv({-1, 3})));
  CHECK_THROWS_AS(trop_mul(Tropical(gv({1})), Tropical(gv({1, 2}))), ArityMismatchError);
}

TEST_CASE("semiring axioms on sampled values") {
  Rng rng(99);
  auto sample = [&]() {
    return rng.chance(0.2) ? bot() : Tropical(rng.group_value(2));
  };
  for (int trial = 0; trial < 400; ++trial) {
    Tropical a = sample(), b = sample(), c = sample();
    CHECK(trop_add(a, b) == trop_add(b, a));
    CHECK(trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c)));
    CHECK(trop_mul(a, b) == trop_mul(b, a));
    CHECK(trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c)));
    CHECK(trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c)));
    CHECK(trop_add(bot(), a) == a);
    CHECK(trop_mul(bot(), a) == bot());
    if (a.is_finite()) CHECK(trop_mul(Tropical::unit(2), a) == a);
  }
}

TEST_CASE("signed numbers: sign zero iff bottom modulus") {
  CHECK(SignedTropical::of(0, fin(3)).is_bottom());
  CHECK(SignedTropical::of(1, bot()).is_bottom());
  CHECK(pos(5).sign() == 1);
  CHECK(neg(5).modulus() == fin(5));
  CHECK(pos(0) == pos(0));
  CHECK_FALSE(pos(0) == neg(0));
}

TEST_CASE("split, reflection, signed multiplication") {
  auto [p, n] = split(neg(5));
  CHECK(p == bot());
  CHECK(n == fin(5));
  CHECK(st_mul(neg(2), neg(3)) == pos(5));
  CHECK(st_mul(neg(2), pos(3)) == neg(5));
  CHECK(st_mul(pos(2), none()) == none());

  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    SignedTropical x = rng.signed_entry(0.2);
    CHECK(x.reflected().reflected() == x);
    CHECK(trop_add(x.pos_part(), x.neg_part()) == x.modulus());
  }
}

TEST_CASE("row evaluation") {
  SUBCASE("boundary of x1 >= 1") {
    SignedRow row{{pos(0), none()}, neg(1)};
    RowEval ev = eval_row(row, {fin(1), fin(0)});
    CHECK(ev.lhs == fin(1));
    CHECK(ev.rhs == fin(1));
    CHECK(ev.status == RowStatus::active);
  }
  SUBCASE("x2 <= x1 violated at (0, 5)") {
    SignedRow row{{pos(0), neg(0)}, none()};
    CHECK(eval_row(row, {fin(0), fin(5)}).status == RowStatus::violated);
  }
  SUBCASE("both sides bottom count as active") {
    SignedRow row{{neg(0), pos(-1), pos(-2)}, none()};
    RowEval ev = eval_row(row, {bot(), bot(), bot()});
    CHECK(ev.lhs == bot());
    CHECK(ev.rhs == bot());
    CHECK(ev.status == RowStatus::active);
  }
  CHECK_THROWS_AS(eval_row(SignedRow{{pos(0)}, none()}, {fin(0), fin(1)}), ArityMismatchError);
}

TEST_CASE("inequality normalization") {
  SUBCASE("both sides finite keep the larger coefficient") {
    SignedRow row = normalize_inequality({fin(1), bot()}, bot(), {fin(-1), fin(3)}, bot());
    CHECK(row.coeffs[0] == pos(1));
    CHECK(row.coeffs[1] == neg(3));
    CHECK(row.constant == none());
  }
  SUBCASE("one-sided coefficients pass through") {
    SignedRow row = normalize_inequality({fin(4)}, fin(2), {bot()}, bot());
    CHECK(row.coeffs[0] == pos(4));
    CHECK(row.constant == pos(2));
  }
  SUBCASE("ties drop the beta side") {
    SignedRow row = normalize_inequality({fin(7)}, bot(), {fin(7)}, bot());
    CHECK(row.coeffs[0] == pos(7));
  }
}

TEST_CASE("normalization preserves the solution set on grids") {
  Rng rng(321);
  auto sample_side = [&](int n) {
    std::vector<Tropical> side;
    for (int j = 0; j < n; ++j)
      side.push_back(rng.chance(0.3) ? bot() : fin(rng.integer(-3, 3)));
    return side;
  };
  const auto grid = tropical_grid(2, -3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Tropical> alpha = sample_side(2), beta = sample_side(2);
    Tropical alpha0 = rng.chance(0.5) ? bot() : fin(rng.integer(-3, 3));
    Tropical beta0 = rng.chance(0.5) ? bot() : fin(rng.integer(-3, 3));
    SignedRow normalized = normalize_inequality(alpha, alpha0, beta, beta0);
    for (const auto& x : grid) {
      Tropical lhs = alpha0, rhs = beta0;
      for (int j = 0; j < 2; ++j) {
        lhs = trop_add(lhs, trop_mul(alpha[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)]));
        rhs = trop_add(rhs, trop_mul(beta[static_cast<std::size_t>(j)], x[static_cast<std::size_t>(j)]));
      }
      bool original_ok = lhs >= rhs;
      bool normalized_ok = eval_row(normalized, x).status != RowStatus::violated;
      CHECK(original_ok == normalized_ok);
    }
  }
}
