#include "troplp/perturb.hpp"

#include <algorithm>

#include "troplp/errors.hpp"

namespace troplp {

PerturbationContext::PerturbationContext(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 1) throw ValidationError("perturbation context needs m >= 0, n >= 1");
}

GroupValue PerturbationContext::d(int i) const {
  if (i < 1 || i > m_) throw Error("d index out of range");
  return GroupValue(std::vector<Rational>{Rational(-i), Rational(0)});
}

GroupValue PerturbationContext::l(int j) const {
  if (j < 1 || j > n_ + 1) throw Error("l index out of range");
  long layer = (j == n_ + 1) ? -(m_ + 1) : -(j + m_ + 1);
  return GroupValue(std::vector<Rational>{Rational(layer), Rational(0)});
}

GroupValue PerturbationContext::epsilon(int row, int col) const {
  if (row < 1 || row > m_ + n_ + 2 || col < 1 || col > n_ + 1)
    throw Error("epsilon index out of range");
  std::vector<Rational> coords(static_cast<std::size_t>(n_ + 1));
  coords[static_cast<std::size_t>(col - 1)] = Rational(row);
  return GroupValue(std::move(coords));
}

Rational bound_u(const SignedMatrix& a, const std::vector<SignedTropical>& b) {
  Rational best(0);
  auto consider = [&](const SignedTropical& x) {
    if (x.is_bottom()) return;
    if (x.modulus().value().arity() != 1)
      throw ArityMismatchError("bound_u expects arity-1 data");
    Rational v = x.modulus().value().coord(0).abs();
    if (v > best) best = v;
  };
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) consider(a.at(i, j));
  for (const auto& x : b) consider(x);
  return Rational(2L * a.cols()) * best;
}

Tropical lift_to_layers(const Tropical& x) {
  if (x.is_bottom()) return x;
  if (x.value().arity() != 1) throw ArityMismatchError("lift_to_layers expects arity-1 data");
  return Tropical(GroupValue(std::vector<Rational>{Rational(0), x.value().coord(0)}));
}

SignedTropical lift_to_layers(const SignedTropical& x) {
  return SignedTropical::of(x.sign(), lift_to_layers(x.modulus()));
}

SignedMatrix apply_perturbation(const SignedMatrix& m, const PerturbationContext& ctx,
                                int row_offset) {
  if (m.cols() != ctx.n() + 1)
    throw ArityMismatchError("apply_perturbation: matrix has " + std::to_string(m.cols()) +
                             " columns, epsilon block has " + std::to_string(ctx.n() + 1));
  if (row_offset < 0 || row_offset + m.rows() > ctx.m() + ctx.n() + 2)
    throw ArityMismatchError("apply_perturbation: rows do not fit the epsilon block");
  const int arity = ctx.perturbed_arity();
  SignedMatrix out(m.rows(), m.cols(), arity);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const SignedTropical& e = m.at(i, j);
      if (e.is_bottom()) continue;
      if (e.modulus().value().arity() != 2)
        throw ArityMismatchError("apply_perturbation expects arity-2 entries");
      GroupValue eps = ctx.epsilon(row_offset + i + 1, j + 1);
      if (e.sign() < 0) eps = -eps;
      GroupValue lifted = e.modulus().value().embed(arity, 0) + eps.embed(arity, 2);
      out.set(i, j, SignedTropical::of(e.sign(), Tropical(std::move(lifted))));
    }
  return out;
}

namespace {

SignedMatrix coefficient_matrix(const TropicalLP& lp) {
  SignedMatrix a(lp.num_rows(), lp.num_vars(), lp.arity);
  for (int i = 0; i < lp.num_rows(); ++i)
    for (int j = 0; j < lp.num_vars(); ++j)
      a.set(i, j, lp.rows[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)]);
  return a;
}

std::vector<SignedTropical> constants_vector(const TropicalLP& lp) {
  std::vector<SignedTropical> b;
  b.reserve(lp.rows.size());
  for (const auto& row : lp.rows) b.push_back(row.constant);
  return b;
}

} // namespace

SignedMatrix assumption_matrix(const TropicalLP& lp) {
  SignedMatrix m(lp.num_rows() + 1, lp.num_vars() + 1, lp.arity);
  for (int i = 0; i < lp.num_rows(); ++i) {
    for (int j = 0; j < lp.num_vars(); ++j)
      m.set(i, j, lp.rows[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)]);
    m.set(i, lp.num_vars(), lp.rows[static_cast<std::size_t>(i)].constant);
  }
  for (int j = 0; j < lp.num_vars(); ++j)
    m.set(lp.num_rows(), j, SignedTropical::of(+1, lp.objective[static_cast<std::size_t>(j)]));
  return m;
}

PerturbedProgram build_lp_tilde(const TropicalLP& lp) {
  lp.validate();
  if (lp.arity != 1) throw ValidationError("build_lp_tilde expects an arity-1 program");
  const int m = lp.num_rows();
  const int n = lp.num_vars();

  PerturbedProgram out{lp, PerturbationContext(m, n), Rational(0), SignedMatrix(),
                       SignedMatrix(), TropicalLP{}, {}, {}};
  const PerturbationContext& ctx = out.ctx;
  out.u0 = bound_u(coefficient_matrix(lp), constants_vector(lp));
  const Rational& u0 = out.u0;

  // Assemble the arity-2 block [A | b(+)d; -e | u; Id | -l; c | _], where the
  // merged column holds b_i when finite and the slack d_i otherwise.
  SignedMatrix block(m + n + 2, n + 1, 2);
  for (int i = 0; i < m; ++i) {
    const SignedRow& row = lp.rows[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j)
      block.set(i, j, lift_to_layers(row.coeffs[static_cast<std::size_t>(j)]));
    if (row.constant.is_bottom())
      block.set(i, n, SignedTropical::positive(ctx.d(i + 1)));
    else
      block.set(i, n, lift_to_layers(row.constant));
  }
  for (int j = 0; j < n; ++j)
    block.set(m, j, SignedTropical::negative(GroupValue::zero(2)));
  block.set(m, n, SignedTropical::positive(
                      GroupValue(std::vector<Rational>{Rational(0), u0})));
  for (int j = 0; j < n; ++j) {
    block.set(m + 1 + j, j, SignedTropical::positive(GroupValue::zero(2)));
    block.set(m + 1 + j, n, SignedTropical::negative(ctx.l(j + 1)));
  }
  for (int j = 0; j < n; ++j)
    block.set(m + n + 1, j,
              SignedTropical::of(+1, lift_to_layers(lp.objective[static_cast<std::size_t>(j)])));

  out.block_bar = block;
  out.block_tilde = apply_perturbation(block, ctx, 0);

  // Perturbed constraint rows: the block rows minus the objective row, with
  // the merged column as the constant.
  TropicalLP tilde;
  tilde.arity = ctx.perturbed_arity();
  tilde.rows.reserve(static_cast<std::size_t>(m + n + 1));
  for (int i = 0; i < m + n + 1; ++i) {
    SignedRow row;
    row.coeffs.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.coeffs.push_back(out.block_tilde.at(i, j));
    row.constant = out.block_tilde.at(i, n);
    tilde.rows.push_back(std::move(row));
  }
  tilde.objective.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const SignedTropical& c = out.block_tilde.at(m + n + 1, j);
    if (c.sign() < 0) throw InvariantViolation("perturbed objective entry turned negative");
    tilde.objective.push_back(c.modulus());
  }
  out.lp = std::move(tilde);

  // The auxiliary phase needs b and d separately. The merged column only
  // perturbs one of them per row; the other keeps a zero epsilon component,
  // its layer alone separating it from every other entry.
  out.b_tilde.reserve(static_cast<std::size_t>(m));
  out.d_tilde.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (lp.rows[static_cast<std::size_t>(i)].constant.is_bottom()) {
      out.b_tilde.push_back(SignedTropical::bottom());
      out.d_tilde.push_back(out.block_tilde.at(i, n));
    } else {
      out.b_tilde.push_back(out.block_tilde.at(i, n));
      out.d_tilde.push_back(SignedTropical::positive(
          ctx.d(i + 1).embed(ctx.perturbed_arity(), 0)));
    }
  }
  return out;
}

PhaseOneProblem build_phase_one(const PerturbedProgram& p) {
  const int m = p.ctx.m();
  const int n = p.ctx.n();
  const int arity = p.ctx.perturbed_arity();
  const Tropical unit = Tropical::unit(arity);

  PhaseOneProblem ph;
  ph.lp.arity = arity;
  ph.lp.rows.reserve(static_cast<std::size_t>(m + n + 3));

  // Homogenized original rows: A x (+) b t (+) d >= 0 split by signs.
  for (int i = 0; i < m; ++i) {
    SignedRow row;
    row.coeffs.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < n; ++j) row.coeffs.push_back(p.block_tilde.at(i, j));
    row.coeffs.push_back(p.b_tilde[static_cast<std::size_t>(i)]);
    row.constant = p.d_tilde[static_cast<std::size_t>(i)];
    ph.lp.rows.push_back(std::move(row));
  }
  // u t >= e . x, with u moving to the homogenization column.
  {
    SignedRow row;
    row.coeffs.reserve(static_cast<std::size_t>(n + 1));
    for (int j = 0; j < n; ++j) row.coeffs.push_back(p.block_tilde.at(m, j));
    row.coeffs.push_back(p.block_tilde.at(m, n));
    row.constant = SignedTropical::bottom();
    ph.lp.rows.push_back(std::move(row));
  }
  // Variable lower bounds, unchanged.
  for (int j = 0; j < n; ++j) {
    SignedRow row;
    row.coeffs.assign(static_cast<std::size_t>(n + 1), SignedTropical::bottom());
    row.coeffs[static_cast<std::size_t>(j)] = p.block_tilde.at(m + 1 + j, j);
    row.constant = p.block_tilde.at(m + 1 + j, n);
    ph.lp.rows.push_back(std::move(row));
  }
  // 1 >= t and t >= l_{n+1}; both rows carry no epsilon component.
  {
    SignedRow row;
    row.coeffs.assign(static_cast<std::size_t>(n + 1), SignedTropical::bottom());
    row.coeffs[static_cast<std::size_t>(n)] = SignedTropical::negative(GroupValue::zero(arity));
    row.constant = SignedTropical::positive(GroupValue::zero(arity));
    ph.one_geq_t_row = static_cast<int>(ph.lp.rows.size());
    ph.lp.rows.push_back(std::move(row));
  }
  {
    SignedRow row;
    row.coeffs.assign(static_cast<std::size_t>(n + 1), SignedTropical::bottom());
    row.coeffs[static_cast<std::size_t>(n)] = SignedTropical::positive(GroupValue::zero(arity));
    row.constant = SignedTropical::negative(p.ctx.l(n + 1).embed(arity, 0));
    ph.lp.rows.push_back(std::move(row));
  }

  ph.lp.objective.assign(static_cast<std::size_t>(n + 1), Tropical::bottom());
  ph.lp.objective[static_cast<std::size_t>(n)] = unit;

  for (int j = 0; j < n; ++j) ph.initial_basis.push_back(m + 1 + j);
  ph.initial_basis.push_back(m + n + 2);
  return ph;
}

std::vector<Tropical> project_rho_pi(const std::vector<Tropical>& x) {
  std::vector<Tropical> out;
  out.reserve(x.size());
  for (const auto& xi : x) {
    if (xi.is_bottom()) {
      out.push_back(Tropical::bottom());
      continue;
    }
    const GroupValue& v = xi.value();
    if (v.arity() < 2) throw ArityMismatchError("project_rho_pi expects layered values");
    const Rational& layer = v.coord(0);
    if (layer.sign() > 0)
      throw InvariantViolation("project_rho_pi: positive layer coordinate " + v.str());
    if (layer.sign() < 0)
      out.push_back(Tropical::bottom());
    else
      out.push_back(Tropical(GroupValue(v.coord(1))));
  }
  return out;
}

} // namespace troplp
