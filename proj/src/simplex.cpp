#include "troplp/simplex.hpp"

#include <algorithm>
#include <set>

#include "troplp/errors.hpp"

namespace troplp {

namespace {

std::string basis_str(const Basis& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + "}";
}

void check_basis_shape(const TropicalLP& lp, const Basis& basis) {
  if (static_cast<int>(basis.size()) != lp.num_vars())
    throw ValidationError("basis " + basis_str(basis) + " must have one row per variable (" +
                          std::to_string(lp.num_vars()) + ")");
  if (!std::is_sorted(basis.begin(), basis.end()) ||
      std::adjacent_find(basis.begin(), basis.end()) != basis.end())
    throw ValidationError("basis rows must be sorted and distinct");
  if (!basis.empty() && (basis.front() < 0 || basis.back() >= lp.num_rows()))
    throw ValidationError("basis row out of range");
}

SignedMatrix basis_matrix(const TropicalLP& lp, const Basis& basis) {
  SignedMatrix a(static_cast<int>(basis.size()), lp.num_vars(), lp.arity);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int j = 0; j < lp.num_vars(); ++j)
      a.set(static_cast<int>(k), j,
            lp.rows[static_cast<std::size_t>(basis[k])].coeffs[static_cast<std::size_t>(j)]);
  return a;
}

std::vector<SignedTropical> basis_constants(const TropicalLP& lp, const Basis& basis) {
  std::vector<SignedTropical> b;
  b.reserve(basis.size());
  for (int r : basis) b.push_back(lp.rows[static_cast<std::size_t>(r)].constant);
  return b;
}

bool all_positive(const std::vector<SignedTropical>& x) {
  return std::all_of(x.begin(), x.end(), [](const SignedTropical& v) { return v.sign() > 0; });
}

std::vector<Tropical> moduli_of(const std::vector<SignedTropical>& x) {
  std::vector<Tropical> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(v.modulus());
  return out;
}

Tropical objective_value(const TropicalLP& lp, const std::vector<Tropical>& point) {
  Tropical acc;
  for (std::size_t j = 0; j < point.size(); ++j)
    acc = trop_add(acc, trop_mul(lp.objective[j], point[j]));
  return acc;
}

// Feasibility with exact activation bookkeeping: returns the status of every
// row so callers can check both "all satisfied" and "active set == basis".
std::vector<RowStatus> row_statuses(const TropicalLP& lp, const std::vector<Tropical>& point) {
  std::vector<RowStatus> st;
  st.reserve(lp.rows.size());
  for (const auto& row : lp.rows) st.push_back(eval_row(row, point).status);
  return st;
}

bool feasible(const std::vector<RowStatus>& st) {
  return std::none_of(st.begin(), st.end(),
                      [](RowStatus s) { return s == RowStatus::violated; });
}

unsigned long long binom_clamped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / static_cast<unsigned long long>(n - k + i)) return cap;
    r = r * static_cast<unsigned long long>(n - k + i) / static_cast<unsigned long long>(i);
    if (r >= cap) return cap;
  }
  return r;
}

} // namespace

std::optional<int> BlandRule::choose_leaving(const PivotQuery& q) {
  const int wanted = q.direction == Direction::minimize ? -1 : +1;
  for (const auto& [row, sign] : q.reduced_signs)
    if (sign == wanted) return row;
  return std::nullopt;
}

std::unique_ptr<PivotRule> make_pivot_rule(const std::string& name) {
  if (name == "bland") return std::make_unique<BlandRule>();
  throw ValidationError("unknown pivot rule '" + name + "'");
}

std::vector<SignedTropical> basic_point(const TropicalLP& lp, const Basis& basis) {
  check_basis_shape(lp, basis);
  return tropical_cramer(basis_matrix(lp, basis), basis_constants(lp, basis));
}

std::vector<ReducedCost> reduced_costs(const TropicalLP& lp, const Basis& basis) {
  check_basis_shape(lp, basis);
  std::vector<SignedTropical> rhs;
  rhs.reserve(lp.objective.size());
  for (const auto& c : lp.objective) rhs.push_back(SignedTropical::of(-1, c));
  std::vector<SignedTropical> y = tropical_cramer(basis_matrix(lp, basis).transposed(), rhs);
  std::vector<ReducedCost> out;
  out.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) out.push_back({basis[k], y[k]});
  return out;
}

PivotOutcome pivot(const TropicalLP& lp, const Basis& basis, int leaving_row) {
  check_basis_shape(lp, basis);
  if (!std::binary_search(basis.begin(), basis.end(), leaving_row))
    throw ValidationError("leaving row " + std::to_string(leaving_row) + " not in basis");

  std::vector<PivotOutcome> found;
  for (int k = 0; k < lp.num_rows(); ++k) {
    if (std::binary_search(basis.begin(), basis.end(), k)) continue;
    Basis cand;
    cand.reserve(basis.size());
    for (int r : basis)
      if (r != leaving_row) cand.push_back(r);
    cand.push_back(k);
    std::sort(cand.begin(), cand.end());

    SignedMatrix a = basis_matrix(lp, cand);
    PermanentResult per = tropical_permanent(a);
    if (per.value.is_bottom()) continue;
    if (!per.unique)
      throw DegeneracyError("pivot: candidate basis " + basis_str(cand) +
                            " has a degenerate permanent");
    std::vector<SignedTropical> x = tropical_cramer(a, basis_constants(lp, cand));
    if (!all_positive(x)) continue;
    if (!feasible(row_statuses(lp, moduli_of(x)))) continue;
    found.push_back({std::move(cand), std::move(x)});
  }
  if (found.size() != 1)
    throw DegeneracyError("pivot from " + basis_str(basis) + " dropping row " +
                          std::to_string(leaving_row) + ": expected exactly one adjacent basis, found " +
                          std::to_string(found.size()));
  return std::move(found.front());
}

SimplexResult simplex_run(const TropicalLP& lp, const Basis& initial, PivotRule& rule,
                          Direction direction, const SimplexOptions& options) {
  lp.validate();
  check_basis_shape(lp, initial);

  unsigned long long cap = options.max_iterations;
  if (cap == 0)
    cap = binom_clamped(lp.num_rows(), lp.num_vars(), 1ull << 62) + 1;

  SignedMatrix assumption = assumption_matrix(lp);
  MinorSignOracle oracle = [&assumption](const std::vector<int>& rows,
                                         const std::vector<int>& cols) {
    return minor_sign_oracle(assumption, rows, cols);
  };

  SimplexResult res;
  std::vector<Basis> history;
  std::set<Basis> seen;
  Basis basis = initial;
  std::vector<SignedTropical> point = basic_point(lp, basis);
  Tropical prev_objective;
  bool have_prev = false;

  for (unsigned long long iter = 0;; ++iter) {
    if (iter >= cap)
      throw InvariantViolation("simplex exceeded the iteration cap of " + std::to_string(cap));
    if (!all_positive(point))
      throw InvariantViolation("basic point of " + basis_str(basis) + " is not positive");
    std::vector<Tropical> moduli = moduli_of(point);
    std::vector<RowStatus> st = row_statuses(lp, moduli);
    for (int r = 0; r < lp.num_rows(); ++r) {
      bool in_basis = std::binary_search(basis.begin(), basis.end(), r);
      if (st[static_cast<std::size_t>(r)] == RowStatus::violated)
        throw InvariantViolation("basic point of " + basis_str(basis) + " violates row " +
                                 std::to_string(r));
      if (in_basis && st[static_cast<std::size_t>(r)] != RowStatus::active)
        throw InvariantViolation("basis row " + std::to_string(r) + " inactive at its own basic point");
      if (!in_basis && st[static_cast<std::size_t>(r)] == RowStatus::active)
        throw InvariantViolation("non-basis row " + std::to_string(r) + " active at basic point of " +
                                 basis_str(basis));
    }
    Tropical objective = objective_value(lp, moduli);
    if (have_prev) {
      bool ok = direction == Direction::minimize ? objective <= prev_objective
                                                 : objective >= prev_objective;
      if (!ok)
        throw InvariantViolation("objective moved against the optimization direction at basis " +
                                 basis_str(basis));
    }
    prev_objective = objective;
    have_prev = true;

    if (!seen.insert(basis).second)
      throw InvariantViolation("basis " + basis_str(basis) + " repeated during the run");
    history.push_back(basis);

    std::vector<ReducedCost> rc = reduced_costs(lp, basis);
    std::vector<std::pair<int, int>> signs;
    signs.reserve(rc.size());
    for (const auto& c : rc) signs.emplace_back(c.row, c.sign());

    TraceStep step{basis, moduli, objective, signs, std::nullopt, std::nullopt};
    std::optional<int> leaving = rule.choose_leaving({history, signs, direction, oracle});
    if (!leaving) {
      res.trace.push_back(std::move(step));
      res.basis = std::move(basis);
      res.point = std::move(point);
      res.point_moduli = std::move(moduli);
      res.objective = std::move(objective);
      return res;
    }
    step.leaving = *leaving;
    PivotOutcome next = pivot(lp, basis, *leaving);
    for (int r : next.basis)
      if (!std::binary_search(basis.begin(), basis.end(), r)) step.entering = r;
    res.trace.push_back(std::move(step));
    basis = std::move(next.basis);
    point = std::move(next.point);
  }
}

SolveResult solve_general(const TropicalLP& lp, PivotRule& rule, const SimplexOptions& options) {
  lp.validate();
  if (lp.arity != 1) throw ValidationError("solve_general expects an arity-1 program");

  SolveResult res{false, {}, Tropical::bottom(), build_lp_tilde(lp), PhaseOneProblem{},
                  SimplexResult{}, std::nullopt};
  res.phase_one = build_phase_one(res.program);
  res.phase1 = simplex_run(res.phase_one.lp, res.phase_one.initial_basis, rule,
                           Direction::maximize, options);

  const int n = lp.num_vars();
  const Tropical unit = Tropical::unit(res.program.ctx.perturbed_arity());
  if (res.phase1.point_moduli[static_cast<std::size_t>(n)] != unit) return res;  // infeasible

  Basis phase2_basis;
  bool saw_t_row = false;
  for (int r : res.phase1.basis) {
    if (r == res.phase_one.one_geq_t_row) {
      saw_t_row = true;
      continue;
    }
    if (r >= res.program.lp.num_rows())
      throw InvariantViolation("Phase I optimal basis contains row " + std::to_string(r) +
                               ", which has no counterpart in the perturbed program");
    phase2_basis.push_back(r);
  }
  if (!saw_t_row)
    throw InvariantViolation("Phase I reached the unit without activating the t bound row");

  res.phase2 = simplex_run(res.program.lp, phase2_basis, rule, Direction::minimize, options);
  res.feasible = true;
  res.point = project_rho_pi(res.phase2->point_moduli);
  Tropical value;
  for (int j = 0; j < n; ++j)
    value = trop_add(value, trop_mul(lp.objective[static_cast<std::size_t>(j)],
                                     res.point[static_cast<std::size_t>(j)]));
  res.value = value;
  return res;
}

} // namespace troplp
