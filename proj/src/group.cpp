#include "troplp/group.hpp"

#include <sstream>

#include "troplp/errors.hpp"

namespace troplp {

namespace {

void require_same_arity(const GroupValue& a, const GroupValue& b, const char* op) {
  if (a.arity() != b.arity())
    throw ArityMismatchError(std::string(op) + ": arity " + std::to_string(a.arity()) +
                             " vs " + std::to_string(b.arity()));
}

} // namespace

GroupValue GroupValue::zero(int arity) {
  if (arity < 1) throw Error("group arity must be >= 1");
  return GroupValue(std::vector<Rational>(static_cast<std::size_t>(arity)));
}

bool GroupValue::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

GroupValue GroupValue::operator+(const GroupValue& o) const {
  require_same_arity(*this, o, "add");
  std::vector<Rational> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
  return GroupValue(std::move(out));
}

GroupValue GroupValue::operator-(const GroupValue& o) const {
  require_same_arity(*this, o, "sub");
  std::vector<Rational> out(coords_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
  return GroupValue(std::move(out));
}

GroupValue GroupValue::operator-() const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(-c);
  return GroupValue(std::move(out));
}

GroupValue GroupValue::embed(int target_arity, int offset) const {
  if (offset < 0 || offset + arity() > target_arity)
    throw ArityMismatchError("embed: arity " + std::to_string(arity()) + " at offset " +
                             std::to_string(offset) + " does not fit in arity " +
                             std::to_string(target_arity));
  std::vector<Rational> out(static_cast<std::size_t>(target_arity));
  for (int i = 0; i < arity(); ++i) out[static_cast<std::size_t>(offset + i)] = coords_[static_cast<std::size_t>(i)];
  return GroupValue(std::move(out));
}

bool operator==(const GroupValue& a, const GroupValue& b) {
  require_same_arity(a, b, "cmp");
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const GroupValue& a, const GroupValue& b) {
  require_same_arity(a, b, "cmp");
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    auto c = a.coords_[i] <=> b.coords_[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

std::string GroupValue::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ",";
    os << coords_[i].str();
  }
  os << ")";
  return os.str();
}

} // namespace troplp
