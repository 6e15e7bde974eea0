#include <doctest.h>

#include "support/test_support.hpp"
#include "troplp/errors.hpp"
#include "troplp/mpg.hpp"
#include "troplp/simplex.hpp"

using namespace troplp;
using namespace troplp::testing;

namespace {

// Five-state cyclic game whose only winning initial states for Max are the
// two states on the profitable loop.
MeanPayoffGame loop_game() {
  auto t = [](long v) { return fin(v); };
  auto B = bot();
  MeanPayoffGame g;
  g.payments_to_min = {
      {t(0), B, B, B, B},
      {B, t(0), B, B, B},
      {B, B, t(0), B, B},
      {B, B, t(0), t(0), t(0)},
      {B, B, B, t(0), B},
  };
  g.payments_to_max = {
      {B, t(-1), t(-2), B, B},
      {t(-3), B, t(0), B, B},
      {t(0), t(-4), B, B, B},
      {B, B, B, t(1), B},
      {t(0), B, B, B, t(2)},
  };
  return g;
}

MeanPayoffGame one_state_game(long a, long b) {
  MeanPayoffGame g;
  g.payments_to_min = {{fin(a)}};
  g.payments_to_max = {{fin(b)}};
  return g;
}

} // namespace

TEST_CASE("game validation") {
  MeanPayoffGame g = one_state_game(0, 5);
  CHECK_NOTHROW(g.validate());
  g.payments_to_min[0][0] = bot();
  CHECK_THROWS_AS(g.validate(), ValidationError);  // Min stuck
  g = one_state_game(0, 5);
  g.payments_to_max[0][0] = bot();
  CHECK_THROWS_AS(g.validate(), ValidationError);  // Max stuck
  g = one_state_game(0, 5);
  g.payments_to_max[0].push_back(fin(1));
  CHECK_THROWS_AS(g.validate(), ValidationError);  // not rectangular
}

TEST_CASE("feasibility reduction") {
  SUBCASE("loop game rows match the hand-normalized system") {
    TropicalLP lp = to_feasibility(loop_game(), 3);
    REQUIRE(lp.num_rows() == 6);
    REQUIRE(lp.num_vars() == 5);
    // x1 <= max(x2 - 1, x3 - 2)
    CHECK(lp.rows[0].coeffs[0] == neg(0));
    CHECK(lp.rows[0].coeffs[1] == pos(-1));
    CHECK(lp.rows[0].coeffs[2] == pos(-2));
    CHECK(lp.rows[0].coeffs[3] == none());
    CHECK(lp.rows[0].coeffs[4] == none());
    // x2 <= max(x1 - 3, x3)
    CHECK(lp.rows[1].coeffs[0] == pos(-3));
    CHECK(lp.rows[1].coeffs[1] == neg(0));
    CHECK(lp.rows[1].coeffs[2] == pos(0));
    // x3 <= max(x1, x2 - 4)
    CHECK(lp.rows[2].coeffs[0] == pos(0));
    CHECK(lp.rows[2].coeffs[1] == pos(-4));
    CHECK(lp.rows[2].coeffs[2] == neg(0));
    // max(x3, x4, x5) <= x4 + 1: the tied column keeps the larger side
    CHECK(lp.rows[3].coeffs[2] == neg(0));
    CHECK(lp.rows[3].coeffs[3] == pos(1));
    CHECK(lp.rows[3].coeffs[4] == neg(0));
    // x4 <= max(x1, x5 + 2)
    CHECK(lp.rows[4].coeffs[0] == pos(0));
    CHECK(lp.rows[4].coeffs[3] == neg(0));
    CHECK(lp.rows[4].coeffs[4] == pos(2));
    // x_{initial} >= 0
    CHECK(lp.rows[5].coeffs[3] == pos(0));
    CHECK(lp.rows[5].constant == neg(0));
    // objective is all bottom
    for (const auto& c : lp.objective) CHECK(c == bot());
  }
  SUBCASE("known witness satisfies the instances of the winning states") {
    std::vector<Tropical> witness{bot(), bot(), bot(), fin(0), fin(0)};
    for (int j : {3, 4}) {
      TropicalLP lp = to_feasibility(loop_game(), j);
      for (const auto& row : lp.rows)
        CHECK(eval_row(row, witness).status != RowStatus::violated);
    }
  }
  SUBCASE("one-state game") {
    TropicalLP lp = to_feasibility(one_state_game(0, 5), 0);
    REQUIRE(lp.num_rows() == 2);
    CHECK(lp.rows[0].coeffs[0] == pos(5));  // 5 + x1 >= 0 + x1 drops the A side
    CHECK(lp.rows[0].constant == none());
    CHECK(lp.rows[1].coeffs[0] == pos(0));
    CHECK(lp.rows[1].constant == neg(0));
  }
  SUBCASE("tied entries keep exactly one side") {
    MeanPayoffGame g;
    g.payments_to_min = {{fin(2)}};
    g.payments_to_max = {{fin(2)}};
    TropicalLP lp = to_feasibility(g, 0);
    CHECK(lp.rows[0].coeffs[0] == pos(2));
  }
}

TEST_CASE("pipeline winning states") {
  SUBCASE("loop game") {
    WinningAnalysis w = winning_states(loop_game());
    CHECK(w.winning_states() == std::vector<int>{3, 4});
    // the certificate for state 4 keeps the three losing coordinates at bottom
    REQUIRE(w.certificates[3].has_value());
    const auto& cert = *w.certificates[3];
    CHECK(cert[0] == bot());
    CHECK(cert[1] == bot());
    CHECK(cert[2] == bot());
    CHECK(cert[3].is_finite());
    // certificates actually satisfy their feasibility instances
    for (int j : w.winning_states()) {
      TropicalLP lp = to_feasibility(loop_game(), j);
      for (const auto& row : lp.rows)
        CHECK(eval_row(row, *w.certificates[static_cast<std::size_t>(j)]).status !=
              RowStatus::violated);
    }
  }
  SUBCASE("single profitable loop") {
    CHECK(winning_states(one_state_game(0, 5)).winning_states() == std::vector<int>{0});
  }
  SUBCASE("single losing loop") {
    CHECK(winning_states(one_state_game(0, -5)).winning_states().empty());
  }
  SUBCASE("threaded solves agree") {
    WinningAnalysis w = winning_states(loop_game(), "bland", 2);
    CHECK(w.winning_states() == std::vector<int>{3, 4});
  }
}

TEST_CASE("value iteration oracle") {
  SUBCASE("loop game") {
    GameValues v = value_iteration_oracle(loop_game());
    CHECK(v.winning_states() == std::vector<int>{3, 4});
    CHECK(v.chi[3] == Rational(1));  // the 4 -> 4 loop pays +1 per round
    CHECK(v.chi[4] == Rational(1));  // state 5 reaches the same loop
  }
  SUBCASE("one-state loops") {
    CHECK(value_iteration_oracle(one_state_game(0, 5)).chi[0] == Rational(5));
    CHECK(value_iteration_oracle(one_state_game(0, -5)).chi[0] == Rational(-5));
    CHECK(value_iteration_oracle(one_state_game(2, 0)).chi[0] == Rational(-2));
  }
  SUBCASE("all-zero payments") {
    MeanPayoffGame g;
    g.payments_to_min = {{fin(0), fin(0)}, {fin(0), fin(0)}};
    g.payments_to_max = {{fin(0), fin(0)}, {fin(0), fin(0)}};
    GameValues v = value_iteration_oracle(g);
    CHECK(v.chi == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(v.winning_states() == std::vector<int>{0, 1});
  }
  SUBCASE("rational payments are scaled away") {
    MeanPayoffGame g;
    g.payments_to_min = {{Tropical(GroupValue(Rational(1, 2)))}};
    g.payments_to_max = {{Tropical(GroupValue(Rational(1, 3)))}};
    GameValues v = value_iteration_oracle(g);
    CHECK(v.chi[0] == Rational(1, 3) - Rational(1, 2));
    CHECK(v.winning_states().empty());
  }
}

TEST_CASE("oracle operator is monotone and additively homogeneous") {
  Rng rng(31415);
  for (int trial = 0; trial < 40; ++trial) {
    MeanPayoffGame g = random_game(1000 + static_cast<unsigned>(trial), 3, 3, 0.3, 4);
    std::vector<Rational> x, y;
    for (int j = 0; j < 3; ++j) {
      Rational a = rng.rational(-5, 5);
      x.push_back(a);
      y.push_back(a + rng.rational(0, 5, 1).abs());
    }
    std::vector<Rational> fx = one_round_values(g, x), fy = one_round_values(g, y);
    for (int j = 0; j < 3; ++j) CHECK(fx[static_cast<std::size_t>(j)] <= fy[static_cast<std::size_t>(j)]);
    Rational c = rng.rational(-4, 4);
    std::vector<Rational> shifted = x;
    for (auto& v : shifted) v += c;
    std::vector<Rational> fs = one_round_values(g, shifted);
    for (int j = 0; j < 3; ++j) CHECK(fs[static_cast<std::size_t>(j)] == fx[static_cast<std::size_t>(j)] + c);
  }
}

TEST_CASE("winning set is invariant under positive scaling") {
  for (unsigned seed : {11u, 22u, 33u, 44u}) {
    MeanPayoffGame g = random_game(seed, 3, 3, 0.3, 4);
    MeanPayoffGame scaled = g;
    auto scale = [](std::vector<std::vector<Tropical>>& mat) {
      for (auto& row : mat)
        for (auto& e : row)
          if (e.is_finite())
            e = Tropical(GroupValue(Rational(e.value().coord(0)) * Rational(3, 2)));
    };
    scale(scaled.payments_to_min);
    scale(scaled.payments_to_max);
    GameValues v1 = value_iteration_oracle(g);
    GameValues v2 = value_iteration_oracle(scaled);
    CHECK(v1.winning == v2.winning);
    for (std::size_t j = 0; j < v1.chi.size(); ++j)
      CHECK(v2.chi[j] == v1.chi[j] * Rational(3, 2));
  }
}

TEST_CASE("the infeasible cycle system matches its game form") {
  // x1 >= 0, x1 <= x2 - 1, x2 <= x1 is the feasibility instance of this
  // two-state game at initial state 1; the cycle loses 1 every two rounds,
  // so the oracle must call both states losing and the reduction must be
  // infeasible everywhere.
  MeanPayoffGame g;
  g.payments_to_min = {{fin(0), bot()}, {bot(), fin(0)}};
  g.payments_to_max = {{bot(), fin(-1)}, {fin(0), bot()}};
  GameValues v = value_iteration_oracle(g);
  CHECK(v.chi[0] == Rational(-1, 2));
  CHECK(v.chi[1] == Rational(-1, 2));
  CHECK(v.winning_states().empty());

  TropicalLP lp = to_feasibility(g, 0);
  REQUIRE(lp.num_rows() == 3);
  CHECK(lp.rows[0].coeffs[0] == neg(0));   // x1 <= x2 - 1
  CHECK(lp.rows[0].coeffs[1] == pos(-1));
  CHECK(lp.rows[1].coeffs[0] == pos(0));   // x2 <= x1
  CHECK(lp.rows[1].coeffs[1] == neg(0));
  CHECK(winning_states(g).winning_states().empty());
}

TEST_CASE("pipeline and oracle agree on random games") {
  for (unsigned seed = 1; seed <= 25; ++seed) {
    MeanPayoffGame g = random_game(seed * 7919, 1 + static_cast<int>(seed % 4),
                                   1 + static_cast<int>((seed / 2) % 4), 0.3, 3);
    GameValues oracle = value_iteration_oracle(g);
    WinningAnalysis pipeline = winning_states(g);
    CHECK(oracle.winning == pipeline.winning);
  }
}
