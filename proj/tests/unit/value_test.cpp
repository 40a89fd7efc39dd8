#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "dialectica/errors.hpp"
#include "dialectica/value.hpp"

using namespace dialectica;

TEST(Value, KindsAndAccessors) {
  EXPECT_TRUE(Value().is(Value::Kind::Unit));
  EXPECT_EQ(Value::symbol("a").name(), "a");
  EXPECT_EQ(Value::integer(-3).as_integer(), -3);
  auto p = Value::pair(Value::integer(1), Value::symbol("x"));
  EXPECT_EQ(p.arity(), 2u);
  EXPECT_EQ(p.second(), Value::symbol("x"));
  EXPECT_EQ(Value::inl(Value::integer(2)).payload(), Value::integer(2));
  EXPECT_THROW(Value::integer(1).name(), InvariantViolation);
  EXPECT_THROW(p[2], InvariantViolation);
}

TEST(Value, FunctionsAreCanonical) {
  auto f = Value::function({{Value::integer(1), Value::symbol("b")}, {Value::integer(0), Value::symbol("a")}});
  auto g = Value::function({{Value::integer(0), Value::symbol("a")}, {Value::integer(1), Value::symbol("b")}});
  EXPECT_EQ(f, g);
  EXPECT_EQ(f.hash(), g.hash());
  EXPECT_EQ(f.apply(Value::integer(1)), Value::symbol("b"));
  EXPECT_EQ(f.lookup(Value::integer(7)), nullptr);
  EXPECT_THROW(f.apply(Value::integer(7)), TruncationMiss);
  EXPECT_THROW(Value::function({{Value::integer(0), Value()}, {Value::integer(0), Value()}}), InvariantViolation);
}

TEST(Value, MultisetsIgnoreOrder) {
  auto a = Value::multiset({Value::integer(2), Value::integer(1), Value::integer(2)});
  auto b = Value::multiset({Value::integer(1), Value::integer(2), Value::integer(2)});
  EXPECT_EQ(a, b);
  EXPECT_EQ(multiset_count(a, Value::integer(2)), 2u);
  EXPECT_EQ(multiset_union(multiset_singleton(Value::integer(1)), multiset_singleton(Value::integer(2))),
            Value::multiset({Value::integer(2), Value::integer(1)}));
  EXPECT_EQ(multiset_empty().items().size(), 0u);
}

TEST(Value, TotalOrderIsConsistent) {
  std::vector<Value> vs = {Value(), Value::symbol("a"), Value::symbol("b"), Value::integer(0),
                           Value::pair(Value(), Value()), Value::inl(Value()), Value::inr(Value()),
                           Value::function({}), multiset_empty(), multiset_singleton(Value())};
  std::set<Value> ordered(vs.begin(), vs.end());
  std::unordered_set<Value> hashed(vs.begin(), vs.end());
  EXPECT_EQ(ordered.size(), vs.size());
  EXPECT_EQ(hashed.size(), vs.size());
  for (const auto& a : vs) {
    for (const auto& b : vs) {
      EXPECT_EQ(a == b, (a <=> b) == 0);
      EXPECT_EQ((a <=> b) < 0, (b <=> a) > 0);
    }
  }
}

TEST(Value, Printing) {
  EXPECT_EQ(Value().to_string(), "*");
  EXPECT_EQ(Value::pair(Value(), Value::integer(3)).to_string(), "(*, 3)");
}
