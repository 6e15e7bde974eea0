#ifndef TROPLP_MPG_HPP
#define TROPLP_MPG_HPP

#include <optional>
#include <string>
#include <vector>

#include "troplp/tropical.hpp"

namespace troplp {

/// Mean payoff game between Min and Max, described by two m x n payment
/// matrices over the arity-1 tropical semiring (bottom = no move):
///   - from a column state j, Min picks a row i with A(i,j) finite and
///     receives A(i,j) from Max;
///   - from a row state i, Max picks a column j with B(i,j) finite and
///     receives B(i,j) from Min.
/// Max wins from an initial column state iff the long-run average payoff
/// there is >= 0.
struct MeanPayoffGame {
  std::vector<std::vector<Tropical>> payments_to_min;  // A, m x n
  std::vector<std::vector<Tropical>> payments_to_max;  // B, m x n

  int num_row_states() const { return static_cast<int>(payments_to_min.size()); }
  int num_col_states() const {
    return payments_to_min.empty() ? 0 : static_cast<int>(payments_to_min.front().size());
  }

  /// Rectangular, equal shapes, arity-1 entries, no identically-bottom
  /// column of A and no identically-bottom row of B (each player always has
  /// a move). Throws ValidationError.
  void validate() const;
};

/// Exact game values per initial column state and the winning set
/// { j : chi_j >= 0 }.
struct GameValues {
  std::vector<Rational> chi;
  std::vector<bool> winning;

  std::vector<int> winning_states() const;  // 0-based
};

/// Feasibility program deciding whether Max wins from `initial_state`
/// (0-based): one normalized row per game row "B_i . x >= A_i . x" plus
/// "x_{initial} >= 0"; the objective is all bottom.
TropicalLP to_feasibility(const MeanPayoffGame& game, int initial_state);

struct WinningAnalysis {
  std::vector<bool> winning;
  /// Feasibility certificate per winning state: an arity-1 point of the
  /// reduction (bottom coordinates allowed).
  std::vector<std::optional<std::vector<Tropical>>> certificates;

  std::vector<int> winning_states() const;  // 0-based
};

/// Decides every initial state through the perturbed simplex pipeline.
/// States are independent solves and may run on several threads.
WinningAnalysis winning_states(const MeanPayoffGame& game, const std::string& rule = "bland",
                               int threads = 1);

/// Independent oracle: value iteration on the one-round dynamic-programming
/// operator, run long enough that the exact game values (rationals with
/// denominator at most n) are recovered by rounding. Payments are cleared to
/// integers first; the winning set is invariant under that positive scaling.
GameValues value_iteration_oracle(const MeanPayoffGame& game);

/// One application of the dynamic-programming operator behind the oracle:
/// F(x)_j = min over Min's moves of (-A(i,j) + max over Max's moves of
/// (B(i,j') + x_{j'})). Order-preserving and additively homogeneous.
std::vector<Rational> one_round_values(const MeanPayoffGame& game,
                                       const std::vector<Rational>& x);

/// Seeded random game with integer payments in [-max_abs, max_abs]; each
/// entry is bottom with probability `bottom_density`, then validity is
/// restored by giving every stuck player one random move.
MeanPayoffGame random_game(unsigned seed, int m, int n, double bottom_density, long max_abs);

} // namespace troplp

#endif
