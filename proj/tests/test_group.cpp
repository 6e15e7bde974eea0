#include <doctest.h>

#include "support/test_support.hpp"
#include "troplp/errors.hpp"
#include "troplp/group.hpp"

using namespace troplp;
using namespace troplp::testing;

TEST_CASE("rational canonical form") {
  CHECK(Rational(4, 8).str() == "1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational::parse("2/4") == Rational(1, 2));
  CHECK(Rational::parse("-10").str() == "-10/1");
  // normalizing twice is the same as normalizing once
  Rational r = Rational::parse("6/4");
  CHECK(Rational::parse(r.str()).str() == r.str());
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("lexicographic comparison") {
  CHECK(gv({0, 3}) > gv({-1, 9}));
  CHECK(gv({0, 3}) == gv({0, 3}));
  CHECK(gv({-2, 100, 0}) > gv({-2, 99, 5}));
  CHECK_THROWS_AS((void)(gv({1, 2}) < gv({1, 2, 3})), ArityMismatchError);
}

TEST_CASE("group addition, negation, zero") {
  CHECK(gv({0, 3}) + gv({-1, 2}) == gv({-1, 5}));
  GroupValue a = gv({3, -7, 2});
  CHECK(a + GroupValue::zero(3) == a);
  CHECK(a + (-a) == GroupValue::zero(3));
  CHECK_THROWS_AS(gv({1}) + gv({1, 2}), ArityMismatchError);
}

TEST_CASE("embedding into larger arity") {
  CHECK(gv({5}).embed(2, 1) == gv({0, 5}));
  CHECK(gv({-3, 7}).embed(5, 0) == gv({-3, 7, 0, 0, 0}));
  CHECK(GroupValue::zero(1).embed(4, 2) == GroupValue::zero(4));
  CHECK_THROWS_AS(gv({1, 2}).embed(2, 1), ArityMismatchError);
  CHECK_THROWS_AS(gv({1}).embed(2, -1), ArityMismatchError);
}

TEST_CASE("ordered abelian group axioms on sampled values") {
  Rng rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    int arity = static_cast<int>(rng.integer(1, 4));
    GroupValue a = rng.group_value(arity), b = rng.group_value(arity), c = rng.group_value(arity);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + GroupValue::zero(arity) == a);
    CHECK(a + (-a) == GroupValue::zero(arity));
    // translation invariance of the order
    if (a <= b) CHECK(a + c <= b + c);
    else CHECK(a + c >= b + c);
  }
}

TEST_CASE("embedding is injective and order-preserving") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int arity = static_cast<int>(rng.integer(1, 3));
    int target = arity + static_cast<int>(rng.integer(0, 3));
    int offset = static_cast<int>(rng.integer(0, target - arity));
    GroupValue a = rng.group_value(arity), b = rng.group_value(arity);
    CHECK((a == b) == (a.embed(target, offset) == b.embed(target, offset)));
    CHECK((a < b) == (a.embed(target, offset) < b.embed(target, offset)));
  }
}
