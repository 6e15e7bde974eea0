#include "troplp/mpg.hpp"

#include <future>
#include <gmpxx.h>
#include <random>

#include "troplp/errors.hpp"
#include "troplp/simplex.hpp"

namespace troplp {

void MeanPayoffGame::validate() const {
  const int m = num_row_states();
  const int n = num_col_states();
  if (m < 1 || n < 1) throw ValidationError("game needs at least one state per player");
  if (static_cast<int>(payments_to_max.size()) != m)
    throw ValidationError("payment matrices have different row counts");
  auto check_matrix = [&](const std::vector<std::vector<Tropical>>& mat, const char* name) {
    for (const auto& row : mat) {
      if (static_cast<int>(row.size()) != n)
        throw ValidationError(std::string(name) + " is not rectangular");
      for (const auto& e : row)
        if (e.is_finite() && e.value().arity() != 1)
          throw ValidationError(std::string(name) + " must have arity-1 entries");
    }
  };
  check_matrix(payments_to_min, "payment matrix A");
  check_matrix(payments_to_max, "payment matrix B");
  for (int j = 0; j < n; ++j) {
    bool has_move = false;
    for (int i = 0; i < m; ++i)
      if (payments_to_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_finite())
        has_move = true;
    if (!has_move)
      throw ValidationError("column " + std::to_string(j + 1) +
                            " of A is identically bottom (Min would be stuck)");
  }
  for (int i = 0; i < m; ++i) {
    bool has_move = false;
    for (int j = 0; j < n; ++j)
      if (payments_to_max[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_finite())
        has_move = true;
    if (!has_move)
      throw ValidationError("row " + std::to_string(i + 1) +
                            " of B is identically bottom (Max would be stuck)");
  }
}

std::vector<int> GameValues::winning_states() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < winning.size(); ++j)
    if (winning[j]) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<int> WinningAnalysis::winning_states() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < winning.size(); ++j)
    if (winning[j]) out.push_back(static_cast<int>(j));
  return out;
}

TropicalLP to_feasibility(const MeanPayoffGame& game, int initial_state) {
  game.validate();
  const int m = game.num_row_states();
  const int n = game.num_col_states();
  if (initial_state < 0 || initial_state >= n)
    throw ValidationError("initial state out of range");

  TropicalLP lp;
  lp.arity = 1;
  lp.objective.assign(static_cast<std::size_t>(n), Tropical::bottom());
  lp.rows.reserve(static_cast<std::size_t>(m + 1));
  for (int i = 0; i < m; ++i)
    lp.rows.push_back(normalize_inequality(game.payments_to_max[static_cast<std::size_t>(i)],
                                           Tropical::bottom(),
                                           game.payments_to_min[static_cast<std::size_t>(i)],
                                           Tropical::bottom()));
  SignedRow initial;
  initial.coeffs.assign(static_cast<std::size_t>(n), SignedTropical::bottom());
  initial.coeffs[static_cast<std::size_t>(initial_state)] =
      SignedTropical::positive(GroupValue::zero(1));
  initial.constant = SignedTropical::negative(GroupValue::zero(1));
  lp.rows.push_back(std::move(initial));
  return lp;
}

WinningAnalysis winning_states(const MeanPayoffGame& game, const std::string& rule, int threads) {
  game.validate();
  const int n = game.num_col_states();
  WinningAnalysis res;
  res.winning.assign(static_cast<std::size_t>(n), false);
  res.certificates.assign(static_cast<std::size_t>(n), std::nullopt);

  auto solve_state = [&](int j) {
    auto r = make_pivot_rule(rule);
    SolveResult s = solve_general(to_feasibility(game, j), *r);
    return std::make_pair(s.feasible, s.point);
  };

  if (threads <= 1) {
    for (int j = 0; j < n; ++j) {
      auto [feasible, point] = solve_state(j);
      res.winning[static_cast<std::size_t>(j)] = feasible;
      if (feasible) res.certificates[static_cast<std::size_t>(j)] = point;
    }
    return res;
  }
  std::vector<std::future<std::pair<bool, std::vector<Tropical>>>> futures;
  futures.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    futures.push_back(std::async(std::launch::async, solve_state, j));
  for (int j = 0; j < n; ++j) {
    auto [feasible, point] = futures[static_cast<std::size_t>(j)].get();
    res.winning[static_cast<std::size_t>(j)] = feasible;
    if (feasible) res.certificates[static_cast<std::size_t>(j)] = point;
  }
  return res;
}

namespace {

// Best rational approximation of value/scale with denominator at most
// max_den; the true game value qualifies and is closer than half the gap
// between such rationals, so the result is exact.
Rational round_to_denominator(const mpz_class& value, const mpz_class& scale, int max_den) {
  std::optional<Rational> best;
  Rational target(mpq_class(value, scale));
  for (int q = 1; q <= max_den; ++q) {
    mpz_class num = value * q;
    mpz_class p;
    // nearest integer to num/scale: floor((2 num + scale) / (2 scale))
    mpz_class twice = 2 * num + scale;
    mpz_class den = 2 * scale;
    mpz_fdiv_q(p.get_mpz_t(), twice.get_mpz_t(), den.get_mpz_t());
    Rational cand(mpq_class(p, mpz_class(q)));
    if (!best || (cand - target).abs() < (*best - target).abs()) best = cand;
  }
  return *best;
}

} // namespace

GameValues value_iteration_oracle(const MeanPayoffGame& game) {
  game.validate();
  const int m = game.num_row_states();
  const int n = game.num_col_states();

  // Clear denominators: the winning set is invariant under positive scaling.
  mpz_class lcm_den(1);
  auto fold_den = [&](const Tropical& t) {
    if (t.is_finite()) {
      mpz_class d = Rational(t.value().coord(0)).den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
  };
  for (const auto& row : game.payments_to_min)
    for (const auto& e : row) fold_den(e);
  for (const auto& row : game.payments_to_max)
    for (const auto& e : row) fold_den(e);

  auto scaled = [&](const Tropical& t) -> std::optional<mpz_class> {
    if (t.is_bottom()) return std::nullopt;
    mpq_class q = t.value().coord(0).raw() * mpq_class(lcm_den);
    if (q.get_den() != 1) throw InvariantViolation("payment did not scale to an integer");
    return q.get_num();
  };
  std::vector<std::vector<std::optional<mpz_class>>> a(static_cast<std::size_t>(m)),
      b(static_cast<std::size_t>(m));
  mpz_class w(1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      a[static_cast<std::size_t>(i)].push_back(
          scaled(game.payments_to_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      b[static_cast<std::size_t>(i)].push_back(
          scaled(game.payments_to_max[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
      for (const auto* e : {&a[static_cast<std::size_t>(i)].back(), &b[static_cast<std::size_t>(i)].back()})
        if (*e) {
          mpz_class v = abs(**e);
          if (v > w) w = v;
        }
    }
  }

  // Iteration count: value iteration approaches the per-round value at rate
  // 2(n+m)W / k, and distinct achievable values are at least 1/n^2 apart.
  mpz_class iters_z = 4 * mpz_class(n) * n * (n + m) * w + 1;
  if (!iters_z.fits_ulong_p() || iters_z.get_ui() > 50'000'000ul)
    throw SizeGuardError("value iteration would need " + iters_z.get_str() + " rounds");
  const unsigned long iters = iters_z.get_ui();

  std::vector<mpz_class> x(static_cast<std::size_t>(n), mpz_class(0));
  std::vector<mpz_class> best_b(static_cast<std::size_t>(m));
  std::vector<mpz_class> next(static_cast<std::size_t>(n));
  for (unsigned long it = 0; it < iters; ++it) {
    for (int i = 0; i < m; ++i) {
      bool seen = false;
      for (int j = 0; j < n; ++j) {
        const auto& e = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!e) continue;
        mpz_class v = *e + x[static_cast<std::size_t>(j)];
        if (!seen || v > best_b[static_cast<std::size_t>(i)]) {
          best_b[static_cast<std::size_t>(i)] = v;
          seen = true;
        }
      }
    }
    for (int j = 0; j < n; ++j) {
      bool seen = false;
      for (int i = 0; i < m; ++i) {
        const auto& e = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        if (!e) continue;
        mpz_class v = best_b[static_cast<std::size_t>(i)] - *e;
        if (!seen || v < next[static_cast<std::size_t>(j)]) {
          next[static_cast<std::size_t>(j)] = v;
          seen = true;
        }
      }
    }
    x.swap(next);
  }

  GameValues res;
  res.chi.reserve(static_cast<std::size_t>(n));
  res.winning.reserve(static_cast<std::size_t>(n));
  const mpz_class k(iters);
  for (int j = 0; j < n; ++j) {
    Rational chi_scaled = round_to_denominator(x[static_cast<std::size_t>(j)], k, n);
    // Decision threshold x_j / k > -1/(2n) must agree with chi >= 0.
    bool above_threshold = 2 * n * x[static_cast<std::size_t>(j)] > -k;
    bool win = chi_scaled.sign() >= 0;
    if (win != above_threshold)
      throw InvariantViolation("value iteration decision disagrees with the rounded value");
    res.chi.push_back(chi_scaled / Rational(mpz_class(lcm_den)));
    res.winning.push_back(win);
  }
  return res;
}

std::vector<Rational> one_round_values(const MeanPayoffGame& game,
                                       const std::vector<Rational>& x) {
  game.validate();
  const int m = game.num_row_states();
  const int n = game.num_col_states();
  if (static_cast<int>(x.size()) != n) throw ValidationError("state vector has the wrong length");
  std::vector<Rational> best_b(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    bool seen = false;
    for (int j = 0; j < n; ++j) {
      const Tropical& e = game.payments_to_max[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.is_bottom()) continue;
      Rational v = Rational(e.value().coord(0)) + x[static_cast<std::size_t>(j)];
      if (!seen || v > best_b[static_cast<std::size_t>(i)]) {
        best_b[static_cast<std::size_t>(i)] = v;
        seen = true;
      }
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    bool seen = false;
    for (int i = 0; i < m; ++i) {
      const Tropical& e = game.payments_to_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (e.is_bottom()) continue;
      Rational v = best_b[static_cast<std::size_t>(i)] - Rational(e.value().coord(0));
      if (!seen || v < out[static_cast<std::size_t>(j)]) {
        out[static_cast<std::size_t>(j)] = v;
        seen = true;
      }
    }
  }
  return out;
}

MeanPayoffGame random_game(unsigned seed, int m, int n, double bottom_density, long max_abs) {
  if (m < 1 || n < 1) throw ValidationError("random_game needs m, n >= 1");
  std::mt19937 gen(seed);
  std::uniform_real_distribution<> coin(0.0, 1.0);
  std::uniform_int_distribution<long> pay(-max_abs, max_abs);
  std::uniform_int_distribution<int> row(0, m - 1), col(0, n - 1);
  auto entry = [&]() {
    return coin(gen) < bottom_density ? Tropical::bottom() : Tropical(GroupValue(Rational(pay(gen))));
  };
  MeanPayoffGame game;
  game.payments_to_min.assign(static_cast<std::size_t>(m), {});
  game.payments_to_max.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      game.payments_to_min[static_cast<std::size_t>(i)].push_back(entry());
      game.payments_to_max[static_cast<std::size_t>(i)].push_back(entry());
    }
  for (int j = 0; j < n; ++j) {
    bool ok = false;
    for (int i = 0; i < m; ++i)
      ok = ok || game.payments_to_min[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_finite();
    if (!ok)
      game.payments_to_min[static_cast<std::size_t>(row(gen))][static_cast<std::size_t>(j)] =
          Tropical(GroupValue(Rational(pay(gen))));
  }
  for (int i = 0; i < m; ++i) {
    bool ok = false;
    for (int j = 0; j < n; ++j)
      ok = ok || game.payments_to_max[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_finite();
    if (!ok)
      game.payments_to_max[static_cast<std::size_t>(i)][static_cast<std::size_t>(col(gen))] =
          Tropical(GroupValue(Rational(pay(gen))));
  }
  game.validate();
  return game;
}

} // namespace troplp
