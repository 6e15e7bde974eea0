#ifndef TROPLP_GROUP_HPP
#define TROPLP_GROUP_HPP

#include <compare>
#include <string>
#include <vector>

#include "troplp/rational.hpp"

namespace troplp {

/// Element of a totally ordered abelian group, realized as a fixed-arity
/// vector of exact rationals under lexicographic order. Arity 1 holds plain
/// scalars; higher arities house the layered values used by the perturbation
/// pipeline. Values are immutable after construction.
class GroupValue {
public:
  GroupValue() = default;
  explicit GroupValue(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit GroupValue(Rational scalar) : coords_{std::move(scalar)} {}

  static GroupValue zero(int arity);

  int arity() const { return static_cast<int>(coords_.size()); }
  const Rational& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  GroupValue operator+(const GroupValue& o) const;
  GroupValue operator-(const GroupValue& o) const;
  GroupValue operator-() const;

  /// Zero-pads to `target_arity`, placing this value's coordinates at
  /// positions offset .. offset+arity-1.
  GroupValue embed(int target_arity, int offset) const;

  friend bool operator==(const GroupValue& a, const GroupValue& b);
  /// Lexicographic comparison; first differing coordinate decides.
  /// Throws ArityMismatchError on unequal arity.
  friend std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b);

  std::string str() const;

private:
  std::vector<Rational> coords_;
};

/// Convenience for arity-1 values.
inline GroupValue scalar_value(long n) { return GroupValue(Rational(n)); }
inline GroupValue scalar_value(Rational r) { return GroupValue(std::move(r)); }

} // namespace troplp

#endif
