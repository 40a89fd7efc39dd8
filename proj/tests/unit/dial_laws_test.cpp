#include <gtest/gtest.h>

#include "dialectica/dial_laws.hpp"
#include "oracles.hpp"

using namespace dialectica;

namespace {

// Sum over shapes of |R|^(x * y).
std::uint64_t small_object_count(std::uint64_t r, std::uint64_t n) {
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x <= n; ++x) {
    for (std::uint64_t y = 0; y <= n; ++y) {
      if (x || y) total += oracle::ipow(r, x * y);
    }
  }
  return total;
}

}  // namespace

TEST(SmallObjects, Counts) {
  LinearModel D(boolean_lineale());
  EXPECT_EQ(small_objects(D, 1).size(), 4u);
  EXPECT_EQ(small_objects(D, 2).size(), 30u);
  LinearModel C(lukasiewicz_chain());
  for (std::size_t n = 1; n <= 2; ++n) EXPECT_EQ(small_objects(C, n).size(), small_object_count(3, n));
  DialecticaPair d(boolean_lineale());
  EXPECT_FALSE(small_intuitionistic_objects(d, 1).empty());
}

TEST(SmallObjects, Labels) {
  LinearModel D(boolean_lineale());
  auto one = D.base().element("1"), zero = D.base().element("0");
  auto G = D.tabulated(EffectiveSet::range(2), EffectiveSet::range(2), {one, zero, zero, one});
  EXPECT_EQ(object_label(D.base(), G), "2x2[1,0,0,1]");
  EXPECT_EQ(object_label(D.base(), D.top()), "1x0[]");
}

TEST(Audits, PassAtIndexOne) {
  DialecticaPair d(boolean_lineale());
  auto objs = small_objects(d.linear, 1);
  CategoryAuditStats stats;
  auto cat = category_audit(d.linear, objs, &stats);
  EXPECT_TRUE(cat.all_passed()) << cat.to_text();
  EXPECT_EQ(stats.objects, objs.size());
  EXPECT_GT(stats.composable_triples, 0u);
  EXPECT_TRUE(monoidal_audit(d.linear, objs).all_passed());
  EXPECT_TRUE(star_autonomy_audit(d.linear, objs).all_passed());
  EXPECT_TRUE(products_audit(d.linear, objs).all_passed());
  auto io = small_intuitionistic_objects(d, 1);
  EXPECT_TRUE(adjunction_audit(d, io, objs, io, objs).all_passed());
  EXPECT_TRUE(functor_audit(d, io, objs).all_passed());
}

TEST(Audits, MorphismCountMatchesBruteForce) {
  LinearModel D(boolean_lineale());
  auto objs = small_objects(D, 1);
  std::uint64_t expected = 0;
  for (const auto& G : objs) {
    for (const auto& H : objs) expected += oracle::brute_hom_count(D, G, H);
  }
  CategoryAuditStats stats;
  category_audit(D, objs, &stats);
  EXPECT_EQ(stats.morphisms, expected);
}

TEST(Audits, CategoryOnTheChain) {
  LinearModel C(lukasiewicz_chain());
  auto rep = category_audit(C, small_objects(C, 1));
  EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}
