#include <gtest/gtest.h>

#include <random>

#include "dialectica/dial_laws.hpp"
#include "dialectica/errors.hpp"
#include "dialectica/functors.hpp"
#include "dialectica/posetal_search.hpp"
#include "oracles.hpp"

using namespace dialectica;

namespace {

class DialecticaBool : public ::testing::Test {
 protected:
  LinearModel D{boolean_lineale()};
  Elem zero = D.base().element("0");
  Elem one = D.base().element("1");

  LObject obj(std::size_t nx, std::size_t ny, std::vector<int> bits) {
    std::vector<Elem> e;
    for (int b : bits) e.push_back(b ? one : zero);
    return D.tabulated(EffectiveSet::range(nx), EffectiveSet::range(ny), e);
  }
};

std::vector<std::pair<std::size_t, std::size_t>> shapes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x <= n; ++x) {
    for (std::size_t y = 0; y <= n; ++y) {
      if (x || y) out.emplace_back(x, y);
    }
  }
  return out;
}

}  // namespace

TEST_F(DialecticaBool, UnitHasOnlyTheIdentity) {
  auto I = D.one();
  EXPECT_EQ(I.wit().size(), 1u);
  EXPECT_EQ(I.cowit().size(), 1u);
  auto homs = D.hom(I, I);
  ASSERT_EQ(homs.size(), 1u);
  EXPECT_EQ(homs[0], D.identity(I));
  EXPECT_EQ(D.eta(D.base().unit()), I);
}

TEST_F(DialecticaBool, BothIndexSetsEmptyIsRejected) {
  EXPECT_THROW(D.tabulated(EffectiveSet(), EffectiveSet(), {}), InvariantViolation);
  EXPECT_THROW(D.tabulated(EffectiveSet::range(1), EffectiveSet::range(1), {}), InvariantViolation);
}

TEST_F(DialecticaBool, ConstantsHaveTheirIndexSets) {
  EXPECT_EQ(D.describe(D.one()), "(1 x 1)");
  EXPECT_EQ(D.describe(D.bot()), "(1 x 1)");
  EXPECT_EQ(D.describe(D.top()), "(1 x 0)");
  EXPECT_EQ(D.describe(D.zero()), "(0 x 1)");
  EXPECT_EQ(D.bot().at(0, 0), zero);
  EXPECT_EQ(D.one().at(0, 0), one);
}

// Index-set cardinalities of every connective against closed formulas.
TEST_F(DialecticaBool, ConnectiveCardinalities) {
  std::mt19937_64 rng(7);
  for (std::size_t bound : {1, 2, 3}) {
    Limits lim;
    lim.multiset_bound = bound;
    LinearModel M(boolean_lineale(), lim);
    for (auto [x, y] : shapes(2)) {
      auto G = oracle::random_object(M, rng, x, y);
      EXPECT_EQ(M.dual(G).wit().size(), y);
      EXPECT_EQ(M.dual(G).cowit().size(), x);
      const auto ms_y = oracle::multisets_upto(y, bound);
      const auto ms_x = oracle::multisets_upto(x, bound);
      EXPECT_EQ(M.bang(G).wit().size(), x);
      EXPECT_EQ(M.bang(G).cowit().size(), oracle::ipow(ms_y, x));
      EXPECT_EQ(M.whynot(G).wit().size(), oracle::ipow(ms_x, y));
      EXPECT_EQ(M.whynot(G).cowit().size(), y);
      for (auto [u, v] : shapes(2)) {
        auto H = oracle::random_object(M, rng, u, v);
        auto T = M.tensor(G, H);
        EXPECT_EQ(T.wit().size(), x * u);
        EXPECT_EQ(T.cowit().size(), oracle::ipow(y, u) * oracle::ipow(v, x));
        auto P = M.par(G, H);
        EXPECT_EQ(P.wit().size(), oracle::ipow(x, v) * oracle::ipow(u, y));
        EXPECT_EQ(P.cowit().size(), y * v);
        auto W = M.with_(G, H);
        EXPECT_EQ(W.wit().size(), x * u);
        EXPECT_EQ(W.cowit().size(), y + v);
        auto S = M.plus(G, H);
        EXPECT_EQ(S.wit().size(), x + u);
        EXPECT_EQ(S.cowit().size(), y * v);
        auto L = M.lollipop(G, H);
        EXPECT_EQ(L.wit().size(), oracle::ipow(u, x) * oracle::ipow(y, v));
        EXPECT_EQ(L.cowit().size(), x * v);
      }
    }
  }
}

TEST_F(DialecticaBool, TensorEntriesFollowTheBids) {
  auto G = obj(2, 2, {1, 0, 1, 1});
  auto H = obj(2, 1, {1, 0});
  auto T = D.tensor(G, H);
  const auto& r = D.base();
  for (const auto& w : T.wit()) {
    for (const auto& c : T.cowit()) {
      const Value& x = w[0];
      const Value& u = w[1];
      EXPECT_EQ(T(w, c), r.tensor(G(x, c[0].apply(u)), H(u, c[1].apply(x))));
    }
  }
}

TEST_F(DialecticaBool, DualIsAnInvolutionOnTheNose) {
  std::mt19937_64 rng(11);
  for (auto [x, y] : shapes(2)) {
    auto G = oracle::random_object(D, rng, x, y);
    EXPECT_EQ(D.dual(D.dual(G)), G);
  }
}

TEST_F(DialecticaBool, DeMorganHoldsOnTheNose) {
  std::mt19937_64 rng(13);
  for (auto [x, y] : shapes(2)) {
    for (auto [u, v] : shapes(2)) {
      auto G = oracle::random_object(D, rng, x, y);
      auto H = oracle::random_object(D, rng, u, v);
      EXPECT_EQ(D.dual(D.tensor(G, H)), D.par(D.dual(G), D.dual(H)));
      EXPECT_EQ(D.dual(D.with_(G, H)), D.plus(D.dual(G), D.dual(H)));
    }
  }
}

TEST_F(DialecticaBool, BotTensorTopIsTop) {
  auto T = D.tensor(D.bot(), D.top());
  EXPECT_EQ(T.wit().size(), 1u);
  EXPECT_TRUE(T.cowit().empty());
  auto to = find_hom(D, T, D.top());
  auto from = find_hom(D, D.top(), T);
  ASSERT_TRUE(to && from);
  EXPECT_EQ(D.compose(*from, *to), D.identity(T));
  EXPECT_EQ(D.compose(*to, *from), D.identity(D.top()));
}

TEST_F(DialecticaBool, HomEnumerationMatchesBruteForce) {
  auto objs = small_objects(D, 1);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    objs.push_back(oracle::random_object(D, rng, 1 + i % 2, 1 + (i / 2) % 2));
  }
  for (const auto& G : objs) {
    for (const auto& H : objs) {
      const auto expected = oracle::brute_hom_count(D, G, H);
      EXPECT_EQ(D.hom(G, H).size(), expected);
      EXPECT_EQ(hom_count(D, G, H), expected);
      EXPECT_EQ(hom_exists(D, G, H), expected > 0);
      if (auto m = find_hom(D, G, H)) EXPECT_TRUE(D.well_typed(*m));
    }
  }
}

TEST_F(DialecticaBool, StrategiesForWithArePairs) {
  auto objs = small_objects(D, 2);
  auto I = D.one();
  for (std::size_t i = 0; i < objs.size(); i += 3) {
    for (std::size_t j = 0; j < objs.size(); j += 5) {
      const auto& G = objs[i];
      const auto& H = objs[j];
      EXPECT_EQ(oracle::brute_hom_count(D, I, D.with_(G, H)),
                oracle::brute_hom_count(D, I, G) * oracle::brute_hom_count(D, I, H));
    }
  }
}

TEST_F(DialecticaBool, CompositionComponents) {
  auto G = obj(2, 2, {1, 0, 1, 1});
  auto H = obj(2, 2, {1, 1, 0, 1});
  auto K = obj(1, 2, {1, 1});
  auto mgh = D.hom(G, H);
  auto mhk = D.hom(H, K);
  ASSERT_FALSE(mgh.empty());
  ASSERT_FALSE(mhk.empty());
  for (const auto& m : mgh) {
    for (const auto& n : mhk) {
      auto c = D.compose(n, m);
      EXPECT_TRUE(D.well_typed(c));
      for (const auto& x : G.wit()) EXPECT_EQ(c.f()(x), n.f()(m.f()(x)));
      for (const auto& q : K.cowit()) EXPECT_EQ(c.g()(q), m.g()(n.g()(q)));
      for (const auto& x : G.wit()) {
        for (const auto& q : K.cowit()) {
          // beta at (f x, q) after alpha at (x, g' q).
          const Value gq = n.g()(q);
          auto expect = D.base().compose(n.alpha_at(m.f()(x), q), m.alpha_at(x, gq));
          EXPECT_EQ(c.alpha_at(x, q), expect);
        }
      }
    }
  }
}

TEST_F(DialecticaBool, IdentityLaws) {
  auto objs = small_objects(D, 1);
  for (const auto& G : objs) {
    for (const auto& H : objs) {
      for (const auto& m : D.hom(G, H)) {
        EXPECT_EQ(D.compose(m, D.identity(G)), m);
        EXPECT_EQ(D.compose(D.identity(H), m), m);
      }
    }
  }
}

TEST_F(DialecticaBool, EtaIsFunctorial) {
  const auto& r = D.base();
  for (auto a : r.objects()) {
    EXPECT_EQ(D.eta(r.identity(a)), D.identity(D.eta(a)));
    for (auto b : r.objects()) {
      for (auto c : r.objects()) {
        for (const auto& f : r.hom(a, b)) {
          for (const auto& g : r.hom(b, c)) {
            EXPECT_EQ(D.eta(r.compose(g, f)), D.compose(D.eta(g), D.eta(f)));
          }
        }
      }
    }
  }
}

TEST_F(DialecticaBool, BangEmptyMultisetGivesUnit) {
  auto G = obj(1, 2, {0, 0});
  auto B = D.bang(G);
  Value empty_fn = Value::function({{Value::integer(0), multiset_empty()}});
  EXPECT_EQ(B(Value::integer(0), empty_fn), D.base().unit());
  Value both = Value::function({{Value::integer(0), Value::multiset({Value::integer(0), Value::integer(1)})}});
  EXPECT_EQ(B(Value::integer(0), both), zero);
}

TEST_F(DialecticaBool, BudgetExceededIsReported) {
  Limits lim;
  lim.budget = 100;
  LinearModel small(boolean_lineale(), lim);
  auto G = obj(2, 2, {1, 1, 1, 1});
  EXPECT_THROW(small.tensor(small.tensor(G, G), G), BudgetExceeded);
}

TEST(DialecticaChain, HomCountsMatchBruteForce) {
  LinearModel D(lukasiewicz_chain());
  std::mt19937_64 rng(19);
  for (int i = 0; i < 60; ++i) {
    auto G = oracle::random_object(D, rng, 1 + i % 2, 1 + (i / 2) % 2);
    auto H = oracle::random_object(D, rng, 1 + (i / 4) % 2, 1 + (i / 8) % 2);
    EXPECT_EQ(hom_count(D, G, H), oracle::brute_hom_count(D, G, H));
    EXPECT_EQ(D.hom(G, H).size(), oracle::brute_hom_count(D, G, H));
  }
}
