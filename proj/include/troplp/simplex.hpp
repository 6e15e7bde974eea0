#ifndef TROPLP_SIMPLEX_HPP
#define TROPLP_SIMPLEX_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "troplp/perturb.hpp"
#include "troplp/tropical.hpp"

namespace troplp {

/// A tropical basis: sorted constraint-row indices, one per variable, whose
/// coefficient submatrix has a tropically non-singular permanent.
using Basis = std::vector<int>;

enum class Direction { minimize, maximize };

/// Reduced cost of one basis row: the signed Cramer solution of the
/// transposed basis system against the objective. Signs drive pivoting;
/// moduli are carried for tracing only.
struct ReducedCost {
  int row;
  SignedTropical value;
  int sign() const { return value.sign(); }
};

/// Sign-of-minor oracle over the instance's assumption matrix.
using MinorSignOracle =
    std::function<int(const std::vector<int>&, const std::vector<int>&)>;

/// What a pivoting strategy may look at: the history of bases, the signs of
/// the current reduced costs, and the minor-sign oracle. Moduli are not
/// exposed; combinatorial rules decide on signs alone.
struct PivotQuery {
  const std::vector<Basis>& history;
  const std::vector<std::pair<int, int>>& reduced_signs;  // (row, sign), sorted by row
  Direction direction;
  const MinorSignOracle& minor_sign;
};

class PivotRule {
public:
  virtual ~PivotRule() = default;
  virtual std::string name() const = 0;
  /// Returns the leaving row, or nullopt when the basis is optimal.
  virtual std::optional<int> choose_leaving(const PivotQuery& q) = 0;
};

/// Bland's rule: the smallest basis row whose reduced-cost sign improves the
/// objective (-1 when minimizing, +1 when maximizing); optimal when none.
class BlandRule : public PivotRule {
public:
  std::string name() const override { return "bland"; }
  std::optional<int> choose_leaving(const PivotQuery& q) override;
};

/// Pivot rules by name ("bland"); throws ValidationError on unknown names.
std::unique_ptr<PivotRule> make_pivot_rule(const std::string& name);

/// The unique point activating the basis rows, by tropical Cramer on the
/// basis subsystem. Positivity and feasibility are the caller's checks.
std::vector<SignedTropical> basic_point(const TropicalLP& lp, const Basis& basis);

/// Reduced costs of all basis rows (solution of the transposed basis system
/// transpose(A_I) y = c). All signs >= 0 certifies a minimization optimum,
/// all signs <= 0 a maximization one.
std::vector<ReducedCost> reduced_costs(const TropicalLP& lp, const Basis& basis);

struct PivotOutcome {
  Basis basis;
  std::vector<SignedTropical> point;
};

/// Drops `leaving_row` from the basis and finds the unique other basis on the
/// resulting edge: among all candidate row swaps, exactly one yields a
/// non-singular subsystem with a positive, feasible Cramer point. Zero or
/// several candidates mean the instance is not non-degenerate.
PivotOutcome pivot(const TropicalLP& lp, const Basis& basis, int leaving_row);

struct TraceStep {
  Basis basis;
  std::vector<Tropical> point;
  Tropical objective;
  std::vector<std::pair<int, int>> reduced_signs;
  std::optional<int> leaving;
  std::optional<int> entering;
};

struct SimplexResult {
  Basis basis;
  std::vector<SignedTropical> point;
  std::vector<Tropical> point_moduli;
  Tropical objective;
  std::vector<TraceStep> trace;
};

struct SimplexOptions {
  /// Hard cap on iterations; 0 means the default binom(rows, vars) + 1.
  unsigned long long max_iterations = 0;
};

/// Runs the simplex loop from a feasible basis until the rule reports
/// optimality. Verifies on every iteration that the basic point is positive,
/// feasible, and activates exactly the basis rows, and that no basis repeats;
/// violations indicate a bug or a degenerate instance and throw.
SimplexResult simplex_run(const TropicalLP& lp, const Basis& initial, PivotRule& rule,
                          Direction direction, const SimplexOptions& options = {});

struct SolveResult {
  bool feasible = false;
  std::vector<Tropical> point;  // arity-1 optimal point when feasible
  Tropical value;               // objective value at the point
  PerturbedProgram program;
  PhaseOneProblem phase_one;
  SimplexResult phase1;
  std::optional<SimplexResult> phase2;
};

/// Solves an arbitrary arity-1 tropical linear program: perturbs it, decides
/// feasibility by maximizing the Phase I variable, then minimizes the
/// objective from the basis Phase I hands over, and projects the optimum
/// back to arity 1.
SolveResult solve_general(const TropicalLP& lp, PivotRule& rule,
                          const SimplexOptions& options = {});

} // namespace troplp

#endif
