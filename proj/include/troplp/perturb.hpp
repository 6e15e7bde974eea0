#ifndef TROPLP_PERTURB_HPP
#define TROPLP_PERTURB_HPP

#include <vector>

#include "troplp/linalg.hpp"
#include "troplp/tropical.hpp"

namespace troplp {

/// Fixed coefficients of the two-stage symbolic perturbation for an m x n
/// instance. The first stage lifts scalars into the layered group R^2
/// (a pair (layer, value); negative layers are infinitely small). The second
/// stage appends an epsilon block from R^{n+1}, one coordinate per column of
/// the extended constraint matrix.
///
/// Layer scalars: d_i = (-i, 0) for the row slacks, l_j = (-(j+m+1), 0) for
/// the variable lower bounds, l_{n+1} = (-(m+1), 0) for the Phase I bound;
/// all layers are pairwise distinct and l_j << l_{n+1} << d_i.
/// Epsilon block: E has (m+n+2) rows and (n+1) columns, E(i, j) = i * delta^j
/// in R^{n+1}; every entry is lexicographically positive.
class PerturbationContext {
public:
  PerturbationContext(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  /// Group arity of fully perturbed values: 2 + (n+1).
  int perturbed_arity() const { return n_ + 3; }

  /// d_i, 1-based i in [m]; arity 2.
  GroupValue d(int i) const;
  /// l_j, 1-based j in [n+1]; arity 2.
  GroupValue l(int j) const;
  /// E entry, 1-based row in [m+n+2], 1-based column in [n+1]; arity n+1.
  GroupValue epsilon(int row, int col) const;

private:
  int m_, n_;
};

/// u0 = 2n * max over finite entries of A and b of the classical absolute
/// value of the entry's (rational, arity-1) modulus; 0 when everything is
/// bottom. Every extreme-point coordinate of the feasible set is <= u0.
Rational bound_u(const SignedMatrix& a, const std::vector<SignedTropical>& b);

/// Lifts an arity-1 scalar into the layered group: modulus beta becomes
/// (0, beta), sign preserved, bottom stays bottom.
SignedTropical lift_to_layers(const SignedTropical& x);
Tropical lift_to_layers(const Tropical& x);

/// Applies the epsilon block to an arity-2 matrix whose rows occupy block
/// rows row_offset+1 .. row_offset+rows (1-based into E) and whose columns
/// match E's columns. A positive entry (a, b) at block position (i, j)
/// becomes (a, b, E(i,j)); a negative one becomes -(a, b, -E(i,j)).
SignedMatrix apply_perturbation(const SignedMatrix& m, const PerturbationContext& ctx,
                                int row_offset = 0);

/// The perturbed form of an arbitrary arity-1 program, plus everything the
/// two solver phases need. Constraint rows of the perturbed program, in
/// order: the m original rows (with the merged constant column), one upper
/// bound row "u >= e . x", and n lower bound rows "x_j >= l_j".
struct PerturbedProgram {
  TropicalLP original;       // the arity-1 input
  PerturbationContext ctx;
  Rational u0;               // coordinate bound dominating every extreme point
  SignedMatrix block_bar;    // (m+n+2) x (n+1), arity 2: [A|b(+)d; -e|u; Id|-l; c|_]
  SignedMatrix block_tilde;  // the same block after the epsilon perturbation
  TropicalLP lp;             // the perturbed program: m+n+1 rows, n variables
  std::vector<SignedTropical> b_tilde;  // perturbed b (bottom where b_i is bottom)
  std::vector<SignedTropical> d_tilde;  // perturbed d (H-component 0 where b_i is finite)
};

/// Builds the perturbed program from an arbitrary instance.
PerturbedProgram build_lp_tilde(const TropicalLP& lp);

/// The auxiliary feasibility problem over variables (x, t): homogenized
/// original rows with slack d, "u t >= e . x", the variable lower bounds,
/// "1 >= t" and "t >= l_{n+1}". Maximizing t reaches the group unit exactly
/// when the perturbed program is feasible. The initial basis activates the
/// n+1 lower bound rows.
struct PhaseOneProblem {
  TropicalLP lp;                  // m+n+3 rows, n+1 variables (t last)
  std::vector<int> initial_basis; // 0-based row indices, sorted
  int one_geq_t_row;              // index of the "1 >= t" row
};

PhaseOneProblem build_phase_one(const PerturbedProgram& p);

/// Projects a fully perturbed point back to arity 1: drops the epsilon
/// coordinates, keeps layer-0 values and sends negative layers to bottom.
/// A positive leading layer violates the feasible-point contract.
std::vector<Tropical> project_rho_pi(const std::vector<Tropical>& x);

/// The matrix whose tropical genericity is the pipeline's non-degeneracy
/// requirement: constraint coefficients and constants, with the objective
/// as an extra row [c | bottom].
SignedMatrix assumption_matrix(const TropicalLP& lp);

} // namespace troplp

#endif
