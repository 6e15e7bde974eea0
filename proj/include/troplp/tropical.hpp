#ifndef TROPLP_TROPICAL_HPP
#define TROPLP_TROPICAL_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "troplp/group.hpp"

namespace troplp {

/// Max-plus semiring over a lexicographic group: a group value or bottom.
/// Bottom is neutral for the max-addition and absorbing for multiplication.
class Tropical {
public:
  Tropical() = default;  // bottom
  explicit Tropical(GroupValue v) : v_(std::move(v)) {}

  static Tropical bottom() { return Tropical(); }
  static Tropical unit(int arity) { return Tropical(GroupValue::zero(arity)); }

  bool is_bottom() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }
  const GroupValue& value() const;

  std::string str() const { return is_bottom() ? "_" : v_->str(); }

  friend bool operator==(const Tropical& a, const Tropical& b);
  /// Total order with bottom below every finite value.
  friend std::strong_ordering operator<=>(const Tropical& a, const Tropical& b);

private:
  std::optional<GroupValue> v_;
};

/// a (+) b = max(a, b).
Tropical trop_add(const Tropical& a, const Tropical& b);
/// a (*) b = group sum, with bottom absorbing.
Tropical trop_mul(const Tropical& a, const Tropical& b);

/// Signed tropical number: a sign in {-1, 0, +1} and a tropical modulus.
/// sign == 0 iff modulus is bottom. Encodes which side of an inequality a
/// coefficient sits on; numbers of opposite sign are never added directly,
/// evaluation always splits into positive and negative parts first.
class SignedTropical {
public:
  SignedTropical() : sign_(0) {}  // bottom

  static SignedTropical bottom() { return SignedTropical(); }
  static SignedTropical positive(Tropical mod) { return of(+1, std::move(mod)); }
  static SignedTropical negative(Tropical mod) { return of(-1, std::move(mod)); }
  static SignedTropical positive(GroupValue v) { return of(+1, Tropical(std::move(v))); }
  static SignedTropical negative(GroupValue v) { return of(-1, Tropical(std::move(v))); }
  /// Normalizes: a bottom modulus forces sign 0, sign 0 forces bottom.
  static SignedTropical of(int sign, Tropical mod);

  int sign() const { return sign_; }
  const Tropical& modulus() const { return mod_; }
  bool is_bottom() const { return sign_ == 0; }

  /// Positive part: |x| if x is positive, bottom otherwise.
  Tropical pos_part() const { return sign_ > 0 ? mod_ : Tropical::bottom(); }
  /// Negative part: |x| if x is negative, bottom otherwise.
  Tropical neg_part() const { return sign_ < 0 ? mod_ : Tropical::bottom(); }

  /// Reflection x -> (-)x: flips the sign, keeps the modulus.
  SignedTropical reflected() const;

  std::string str() const;

  friend bool operator==(const SignedTropical& a, const SignedTropical& b) {
    return a.sign_ == b.sign_ && a.mod_ == b.mod_;
  }

private:
  int sign_;
  Tropical mod_;
};

/// Splits into (positive part, negative part); their max is the modulus.
std::pair<Tropical, Tropical> split(const SignedTropical& x);
/// Multiplies signs and moduli.
SignedTropical st_mul(const SignedTropical& a, const SignedTropical& b);

/// One tropical affine inequality in normalized two-sided form:
///   sum_j coeff_j^+ x_j (+) const^+  >=  sum_j coeff_j^- x_j (+) const^-.
struct SignedRow {
  std::vector<SignedTropical> coeffs;
  SignedTropical constant;
};

enum class RowStatus { violated, satisfied_strict, active };

struct RowEval {
  Tropical lhs;
  Tropical rhs;
  RowStatus status;
};

/// Evaluates a row at a point; active iff lhs == rhs, satisfied iff lhs >= rhs.
RowEval eval_row(const SignedRow& row, const std::vector<Tropical>& x);

/// Normalizes "alpha . x (+) alpha0 >= beta . x (+) beta0" so that each
/// variable (and the constant) appears on one side only. When both sides are
/// finite the larger one is kept, ties keeping the alpha side; the solution
/// set is unchanged.
SignedRow normalize_inequality(const std::vector<Tropical>& alpha, const Tropical& alpha_const,
                               const std::vector<Tropical>& beta, const Tropical& beta_const);

/// Tropical linear program: minimize c . x over the rows' solution set.
/// All coefficients share one group arity.
struct TropicalLP {
  std::vector<SignedRow> rows;
  std::vector<Tropical> objective;  // length = number of variables
  int arity = 1;

  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_vars() const { return static_cast<int>(objective.size()); }

  /// Checks rectangular shape and uniform arity; throws ValidationError.
  void validate() const;
};

} // namespace troplp

#endif
