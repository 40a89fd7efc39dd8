#include <gtest/gtest.h>

#include <random>

#include "dialectica/dial_laws.hpp"
#include "dialectica/functors.hpp"
#include "dialectica/posetal_search.hpp"
#include "oracles.hpp"

using namespace dialectica;

TEST(LiftMultiplication, IsIdentityOnBooleanFamilies) {
  DialecticaPair d(boolean_lineale());
  for (const auto& G : small_objects(d.linear, 2)) {
    auto K = lift_multiplication(d, G);
    EXPECT_EQ(K.wit(), G.wit());
    EXPECT_EQ(K.cowit(), G.cowit());
    EXPECT_EQ(K.table(), G.table());
  }
}

TEST(LiftMultiplication, SingletonWrapsBackwardMaps) {
  DialecticaPair d(boolean_lineale());
  auto objs = small_objects(d.linear, 1);
  for (const auto& G : objs) {
    for (const auto& H : objs) {
      for (const auto& m : d.linear.hom(G, H)) {
        auto n = lift_multiplication(d, m);
        for (const auto& x : G.wit()) {
          for (const auto& v : H.cowit()) EXPECT_EQ(n.g_at(x, v), multiset_singleton(m.g()(v)));
        }
      }
    }
  }
}

TEST(LiftMultiplication, IsFunctorial) {
  DialecticaPair d(boolean_lineale());
  const auto& L = d.linear;
  const auto& I = d.intuitionistic;
  auto objs = small_objects(L, 2);
  std::vector<LObject> sample;
  for (const auto& G : objs) {
    if (G.wit().size() == 2 && G.cowit().size() == 2) sample.push_back(G);
  }
  ASSERT_EQ(sample.size(), 16u);
  for (const auto& G : sample) {
    EXPECT_EQ(lift_multiplication(d, L.identity(G)), I.identity(lift_multiplication(d, G)));
  }
  // Every composable pair among a spread of 2x2 objects.
  for (std::size_t a = 0; a < sample.size(); a += 5) {
    for (std::size_t b = 0; b < sample.size(); b += 3) {
      for (std::size_t c = 0; c < sample.size(); c += 7) {
        for (const auto& m : L.hom(sample[a], sample[b])) {
          for (const auto& n : L.hom(sample[b], sample[c])) {
            EXPECT_EQ(lift_multiplication(d, L.compose(n, m)),
                      I.compose(lift_multiplication(d, n), lift_multiplication(d, m)));
          }
        }
      }
    }
  }
}

TEST(LiftLinearisation, ValuesAreMeetsOverTheFibre) {
  DialecticaPair d(boolean_lineale());
  const auto& r = d.lineale();
  for (const auto& K : small_intuitionistic_objects(d, 2)) {
    auto LK = lift_linearisation(d, K);
    EXPECT_EQ(LK.wit(), K.wit());
    for (const auto& x : LK.wit()) {
      for (const auto& h : LK.cowit()) {
        Elem expect = r.unit();
        for (const auto& y : h.apply(x).items()) {
          if (K(x, y) == r.element("0")) expect = r.element("0");
        }
        EXPECT_EQ(LK(x, h), expect);
      }
    }
  }
}

TEST(LiftLinearisation, IsFunctorial) {
  DialecticaPair d(boolean_lineale());
  const auto& L = d.linear;
  const auto& I = d.intuitionistic;
  auto objs = small_intuitionistic_objects(d, 1);
  for (const auto& K : objs) {
    EXPECT_EQ(lift_linearisation(d, I.identity(K)), L.identity(lift_linearisation(d, K)));
  }
  for (const auto& A : objs) {
    for (const auto& B : objs) {
      for (const auto& C : objs) {
        for (const auto& m : I.hom(A, B)) {
          for (const auto& n : I.hom(B, C)) {
            EXPECT_EQ(lift_linearisation(d, I.compose(n, m)),
                      L.compose(lift_linearisation(d, n), lift_linearisation(d, m)));
          }
        }
      }
    }
  }
}

TEST(LinearNonlinear, CompositeIsBang) {
  for (const auto& r : {boolean_lineale(), lukasiewicz_chain()}) {
    DialecticaPair d(r);
    for (const auto& G : small_objects(d.linear, 1)) {
      EXPECT_EQ(lift_linearisation(d, lift_multiplication(d, G)), d.linear.bang(G));
      EXPECT_EQ(four_part_bang(d.linear, G), d.linear.bang(G));
    }
  }
}

TEST(Adjunction, HomBijectionOnSingletons) {
  DialecticaPair d(boolean_lineale());
  for (const auto& K : small_intuitionistic_objects(d, 1)) {
    for (const auto& H : small_objects(d.linear, 1)) {
      auto rep = adjunction_witness(d, K, H);
      EXPECT_TRUE(rep.ok());
      EXPECT_EQ(rep.linear_homs, rep.intuitionistic_homs);
    }
  }
}

TEST(Adjunction, NaturalitySquares) {
  DialecticaPair d(boolean_lineale());
  auto iobjs = small_intuitionistic_objects(d, 1);
  auto lobjs = small_objects(d.linear, 1);
  std::size_t squares = 0;
  for (const auto& K2 : iobjs) {
    for (const auto& K : iobjs) {
      for (const auto& a : d.intuitionistic.hom(K2, K)) {
        for (const auto& H : lobjs) {
          for (const auto& m : d.linear.hom(lift_linearisation(d, K), H)) {
            for (const auto& H2 : lobjs) {
              for (const auto& b : d.linear.hom(H, H2)) {
                EXPECT_TRUE(adjunction_natural(d, a, m, b));
                ++squares;
              }
            }
          }
        }
      }
    }
  }
  EXPECT_GT(squares, 100u);
}

TEST(Endofunctors, AOnEmptyMultisetIsUnit) {
  LinearModel D(boolean_lineale());
  auto G = D.tabulated(EffectiveSet::range(1), EffectiveSet::range(2),
                       {D.base().element("0"), D.base().element("0")});
  auto A = endofunctor_A(D, G);
  EXPECT_EQ(A(Value::integer(0), multiset_empty()), D.base().unit());
}

TEST(Endofunctors, BOverSingletonWitnesses) {
  LinearModel D(boolean_lineale());
  for (const auto& G : small_objects(D, 2)) {
    if (G.wit().size() != 1) continue;
    auto B = endofunctor_B(D, G);
    EXPECT_EQ(B.cowit().size(), G.cowit().size());
    for (const auto& h : B.cowit()) {
      EXPECT_EQ(B(G.wit()[0], h), G(G.wit()[0], h.apply(G.wit()[0])));
    }
  }
}

TEST(Endofunctors, FourPartFactorisationOnPairs) {
  LinearModel D(boolean_lineale());
  for (const auto& G : small_objects(D, 2)) {
    if (G.wit().size() * G.cowit().size() > 2) continue;
    EXPECT_EQ(four_part_bang(D, G), D.bang(G));
  }
}

TEST(StrongMonoidality, RoundTripsAreIdentities) {
  DialecticaPair d(boolean_lineale());
  auto objs = small_intuitionistic_objects(d, 1);
  for (const auto& K1 : objs) {
    for (const auto& K2 : objs) {
      auto [to, from] = strong_monoidality_witness(d, K1, K2);
      EXPECT_TRUE(d.linear.well_typed(to));
      EXPECT_TRUE(d.linear.well_typed(from));
      EXPECT_EQ(d.linear.compose(from, to), d.linear.identity(to.src()));
      EXPECT_EQ(d.linear.compose(to, from), d.linear.identity(to.dst()));
    }
  }
}

TEST(LinealeMorphisms, IdentityLiftsToIdentity) {
  auto r = boolean_lineale();
  auto phi = identity_lineale_morphism(r);
  EXPECT_TRUE(check_lineale_morphism(phi).all_passed());
  LinearModel D(r);
  for (const auto& G : small_objects(D, 1)) {
    EXPECT_EQ(lift_object(phi, G), G);
    for (const auto& m : D.hom(G, G)) EXPECT_EQ(lift_morphism(phi, D, m), m);
  }
}

TEST(LinealeMorphisms, ChainCollapseOntoBoolean) {
  // 0 and 1/2 go to 0, 1 goes to 1.
  auto chain = lukasiewicz_chain();
  auto b = boolean_lineale();
  LinealeMorphism phi{chain, b, {b.element("0"), b.element("0"), b.element("1")}};
  auto rep = check_lineale_morphism(phi);
  EXPECT_TRUE(rep.all_passed()) << rep.to_text();

  DialecticaPair src(chain), dst(b);
  std::mt19937_64 rng(23);
  std::vector<LObject> objs;
  for (int i = 0; i < 50; ++i) objs.push_back(oracle::random_object(src.linear, rng, 1 + i % 2, 1 + (i / 2) % 2));
  auto squares = check_lifted_squares(phi, src, dst, objs, small_intuitionistic_objects(src, 1));
  EXPECT_TRUE(squares.all_passed()) << squares.to_text();

  // Lifted morphisms stay well-typed.
  for (std::size_t i = 0; i + 1 < objs.size(); i += 7) {
    for (const auto& m : src.linear.hom(objs[i], objs[i + 1])) {
      EXPECT_TRUE(dst.linear.well_typed(lift_morphism(phi, dst.linear, m)));
    }
  }
}

TEST(LinealeMorphisms, NonMonotoneMapIsRejected) {
  auto b = boolean_lineale();
  LinealeMorphism swap{b, b, {b.element("1"), b.element("0")}};
  EXPECT_FALSE(check_lineale_morphism(swap).all_passed());
}
