#include "troplp/tropical.hpp"

#include "troplp/errors.hpp"

namespace troplp {

const GroupValue& Tropical::value() const {
  if (!v_) throw Error("value() on tropical bottom");
  return *v_;
}

bool operator==(const Tropical& a, const Tropical& b) {
  if (a.is_bottom() || b.is_bottom()) return a.is_bottom() == b.is_bottom();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const Tropical& a, const Tropical& b) {
  if (a.is_bottom() && b.is_bottom()) return std::strong_ordering::equal;
  if (a.is_bottom()) return std::strong_ordering::less;
  if (b.is_bottom()) return std::strong_ordering::greater;
  return *a.v_ <=> *b.v_;
}

Tropical trop_add(const Tropical& a, const Tropical& b) {
  return a >= b ? a : b;
}

Tropical trop_mul(const Tropical& a, const Tropical& b) {
  if (a.is_bottom() || b.is_bottom()) return Tropical::bottom();
  return Tropical(a.value() + b.value());
}

SignedTropical SignedTropical::of(int sign, Tropical mod) {
  SignedTropical x;
  if (sign == 0 || mod.is_bottom()) return x;
  if (sign != 1 && sign != -1) throw Error("sign must be -1, 0 or +1");
  x.sign_ = sign;
  x.mod_ = std::move(mod);
  return x;
}

SignedTropical SignedTropical::reflected() const {
  SignedTropical x(*this);
  x.sign_ = -x.sign_;
  return x;
}

std::string SignedTropical::str() const {
  if (sign_ == 0) return "_";
  return (sign_ < 0 ? "(-)" : "") + mod_.str();
}

std::pair<Tropical, Tropical> split(const SignedTropical& x) {
  return {x.pos_part(), x.neg_part()};
}

SignedTropical st_mul(const SignedTropical& a, const SignedTropical& b) {
  return SignedTropical::of(a.sign() * b.sign(), trop_mul(a.modulus(), b.modulus()));
}

RowEval eval_row(const SignedRow& row, const std::vector<Tropical>& x) {
  if (row.coeffs.size() != x.size())
    throw ArityMismatchError("eval_row: " + std::to_string(row.coeffs.size()) +
                             " coefficients vs " + std::to_string(x.size()) + " coordinates");
  Tropical lhs = row.constant.pos_part();
  Tropical rhs = row.constant.neg_part();
  for (std::size_t j = 0; j < x.size(); ++j) {
    lhs = trop_add(lhs, trop_mul(row.coeffs[j].pos_part(), x[j]));
    rhs = trop_add(rhs, trop_mul(row.coeffs[j].neg_part(), x[j]));
  }
  RowStatus st = lhs == rhs  ? RowStatus::active
               : lhs > rhs   ? RowStatus::satisfied_strict
                             : RowStatus::violated;
  return {std::move(lhs), std::move(rhs), st};
}

namespace {

SignedTropical keep_larger_side(const Tropical& alpha, const Tropical& beta) {
  if (alpha.is_bottom() && beta.is_bottom()) return SignedTropical::bottom();
  if (beta.is_bottom() || (alpha.is_finite() && alpha >= beta))
    return SignedTropical::positive(alpha);
  return SignedTropical::negative(beta);
}

} // namespace

SignedRow normalize_inequality(const std::vector<Tropical>& alpha, const Tropical& alpha_const,
                               const std::vector<Tropical>& beta, const Tropical& beta_const) {
  if (alpha.size() != beta.size())
    throw ArityMismatchError("normalize_inequality: side lengths differ");
  SignedRow row;
  row.coeffs.reserve(alpha.size());
  for (std::size_t j = 0; j < alpha.size(); ++j)
    row.coeffs.push_back(keep_larger_side(alpha[j], beta[j]));
  row.constant = keep_larger_side(alpha_const, beta_const);
  return row;
}

void TropicalLP::validate() const {
  auto check = [&](const Tropical& t, const char* what) {
    if (t.is_finite() && t.value().arity() != arity)
      throw ValidationError(std::string("lp: ") + what + " has arity " +
                            std::to_string(t.value().arity()) + ", expected " +
                            std::to_string(arity));
  };
  for (const auto& row : rows) {
    if (static_cast<int>(row.coeffs.size()) != num_vars())
      throw ValidationError("lp: row with " + std::to_string(row.coeffs.size()) +
                            " coefficients, expected " + std::to_string(num_vars()));
    for (const auto& c : row.coeffs) check(c.modulus(), "coefficient");
    check(row.constant.modulus(), "constant");
  }
  for (const auto& c : objective) check(c, "objective entry");
}

} // namespace troplp
