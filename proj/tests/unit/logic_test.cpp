#include <gtest/gtest.h>

#include "dialectica/errors.hpp"
#include "dialectica/logic.hpp"
#include "oracles.hpp"
#include "simadd_rules.hpp"

using namespace dialectica;

namespace {

class Logic : public ::testing::Test {
 protected:
  LinearModel D{boolean_lineale()};
  Elem zero = D.base().element("0");
  Elem one = D.base().element("1");

  ValidityResult valid(const std::string& text, const Valuation& v = {}) {
    return is_valid(D, *parse_formula(text), v);
  }

  std::vector<Valuation> valuations() const {
    std::vector<Valuation> out;
    for (auto a : {zero, one}) {
      for (auto b : {zero, one}) out.push_back({{"p", a}, {"q", b}});
    }
    return out;
  }
};

LinearModel with_bound(const Lineale& r, std::size_t k) {
  Limits lim;
  lim.multiset_bound = k;
  return LinearModel(r, lim);
}

}  // namespace

TEST_F(Logic, InterpretAtomsAndConstants) {
  auto G = interpret(D, *parse_formula("p"), {{"p", one}});
  EXPECT_EQ(G, D.eta(one));
  EXPECT_EQ(interpret(D, *parse_formula("top"), {}), D.top());
  EXPECT_EQ(interpret(D, *parse_formula("p^ * q"), {{"p", one}, {"q", zero}}),
            D.tensor(D.dual(D.eta(one)), D.eta(zero)));
  EXPECT_THROW(interpret(D, *parse_formula("p * r"), {{"p", one}}), ContractViolation);
}

TEST_F(Logic, ParseValuation) {
  auto v = parse_valuation(D.base(), {"p=1", "q=0"});
  EXPECT_EQ(v.at("p"), one);
  EXPECT_EQ(v.at("q"), zero);
  EXPECT_ANY_THROW(parse_valuation(D.base(), {"p=2"}));
  EXPECT_ANY_THROW(parse_valuation(D.base(), {"p"}));
}

TEST_F(Logic, ValidityExamples) {
  auto r = valid("bot * top");
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.verdict(), "valid");
  EXPECT_EQ(r.witnesses, 1u);
  EXPECT_EQ(r.counter_witnesses, 0u);

  EXPECT_FALSE(valid("0").valid);
  EXPECT_EQ(valid("0").verdict(), "invalid");
  EXPECT_TRUE(valid("1").valid);
  EXPECT_FALSE(valid("bot").valid);
  for (auto a : {zero, one}) {
    EXPECT_TRUE(valid("p -o p", {{"p", a}}).valid);
    EXPECT_TRUE(valid("p^ | p", {{"p", a}}).valid);
  }
  EXPECT_FALSE(valid("p", {{"p", zero}}).valid);
  EXPECT_TRUE(valid("!p -o p * p", {{"p", one}}).valid);
}

TEST_F(Logic, RefutationListsEveryWitness) {
  auto r = valid("p * q", {{"p", one}, {"q", zero}});
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.refutation.size(), r.witnesses);
  EXPECT_FALSE(r.witness.has_value());
}

TEST_F(Logic, StrategyCoversEveryCounterWitness) {
  auto r = valid("!p -o p", {{"p", zero}});
  ASSERT_TRUE(r.valid);
  EXPECT_EQ(r.strategy.size(), r.counter_witnesses);
  for (const auto& [y, a] : r.strategy) EXPECT_EQ(a.src, one);
}

// Over an idempotent base the multiset bound never changes a verdict.
TEST_F(Logic, VerdictsAgreeAcrossBounds) {
  auto all = generate_mell({parse_formula("p"), parse_formula("q"), Formula::one(), Formula::bot()}, 2);
  std::vector<LinearModel> models = {with_bound(boolean_lineale(), 1), with_bound(boolean_lineale(), 2),
                                     with_bound(boolean_lineale(), 3)};
  std::size_t checked = 0;
  for (std::size_t i = 0; i < all.size(); i += 53) {
    for (const auto& v : valuations()) {
      bool first = is_valid(models[0], *all[i], v).valid;
      for (std::size_t m = 1; m < models.size(); ++m) {
        try {
          EXPECT_EQ(is_valid(models[m], *all[i], v).valid, first) << all[i]->to_string();
        } catch (const BudgetExceeded&) {
        }
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 800u);
}

TEST(LogicChain, BoundLabelsOnANonIdempotentBase) {
  auto chain = lukasiewicz_chain();
  EXPECT_FALSE(idempotent(chain));
  EXPECT_TRUE(idempotent(boolean_lineale()));
  auto M = with_bound(chain, 1);
  auto at = [&](const char* text, const char* p) {
    return is_valid(M, *parse_formula(text), {{"p", chain.element(p)}}).verdict();
  };
  // Truncated counter-witnesses qualify a positive verdict, truncated
  // witnesses a negative one.
  EXPECT_EQ(at("!p", "1"), "valid-at-bound-1");
  EXPECT_EQ(at("!p", "1/2"), "invalid");
  EXPECT_EQ(at("?p", "0"), "invalid-at-bound-1");
  EXPECT_EQ(at("?p", "1/2"), "valid");
  LinearModel B = with_bound(boolean_lineale(), 1);
  EXPECT_EQ(is_valid(B, *parse_formula("!p"), {{"p", B.base().element("1")}}).verdict(), "valid");
}

TEST_F(Logic, CompletenessWitnessesOnExamples) {
  auto atom = completeness_witnesses(D, *parse_formula("p"), {{"p", one}});
  EXPECT_TRUE(atom.typed());
  EXPECT_EQ(atom.value, one);
  auto t = completeness_witnesses(D, *parse_formula("p * q"), {{"p", one}, {"q", zero}});
  EXPECT_TRUE(t.typed());
  EXPECT_EQ(t.value, zero);
  EXPECT_EQ(t.x, Value::pair(Value::unit(), Value::unit()));
  EXPECT_THROW(completeness_witnesses(D, *parse_formula("p & q"), {{"p", one}, {"q", one}}),
               ShapeUnsupported);
}

TEST_F(Logic, RelativeCompletenessOnBangLollipop) {
  for (const auto& v : valuations()) {
    auto rc = relative_completeness(D, *parse_formula("!p -o p"), v);
    EXPECT_TRUE(rc.validity.valid);
    EXPECT_TRUE(rc.base_valid);
    EXPECT_TRUE(rc.consistent());
    ASSERT_TRUE(rc.composed.has_value());
    EXPECT_EQ(rc.composed->src, one);
  }
}

// Witnesses exist and validity implies validity in the base, on a sample of
// depth-2 formulas and on the chain.
TEST_F(Logic, CompletenessProperty) {
  auto all = generate_mell({parse_formula("p"), parse_formula("q"), Formula::one(), Formula::bot()}, 2);
  for (std::size_t i = 0; i < all.size(); i += 41) {
    for (const auto& v : valuations()) {
      auto w = completeness_witnesses(D, *all[i], v);
      EXPECT_TRUE(w.typed()) << all[i]->to_string();
      auto rc = relative_completeness(D, *all[i], v);
      EXPECT_TRUE(rc.consistent()) << all[i]->to_string();
      if (rc.validity.valid) EXPECT_TRUE(rc.base_valid);
    }
  }
  LinearModel C(lukasiewicz_chain());
  auto leaves = generate_mell({parse_formula("p"), Formula::bot()}, 1);
  for (const auto& f : leaves) {
    for (const char* e : {"0", "1/2", "1"}) {
      Valuation v{{"p", C.base().element(e)}};
      EXPECT_TRUE(completeness_witnesses(C, *f, v).typed()) << f->to_string();
      EXPECT_TRUE(relative_completeness(C, *f, v).consistent()) << f->to_string();
    }
  }
}

TEST_F(Logic, BotTensorTop) {
  auto b = bot_tensor_top_iso(D);
  EXPECT_TRUE(b.inverse);
  EXPECT_EQ(b.to_top.dst(), D.top());
  EXPECT_TRUE(is_valid(D, b.object).valid);
  const auto& r = D.base();
  EXPECT_EQ(interpret_base(r, *parse_formula("bot * top"), {}), zero);
  EXPECT_FALSE(r.leq(r.unit(), interpret_base(r, *parse_formula("bot * top"), {})));
}

TEST_F(Logic, SimAddInterpretation) {
  auto f = load_simadd_file(std::string(DIALECTICA_DATA_DIR) + "/simadd_2x2.json");
  Valuation v{{"p", one}, {"q", zero}};
  auto P = simadd_family(D, f->family(), v);
  EXPECT_EQ(P(Value::symbol("b"), Value::integer(0)), interpret(D, *parse_formula("p * q"), v));
  // Every inner object is 1 x 1, so flattening keeps the outer shape.
  auto G = simadd_interpret(D, f->family(), v);
  EXPECT_EQ(D.describe(G), "(2 x 2)");
  EXPECT_EQ(interpret(D, *f, v), G);
  EXPECT_THROW(simadd_degenerate_iso(D, P), ShapeUnsupported);
  EXPECT_THROW(interpret_base(D.base(), *f, v), ShapeUnsupported);
}

TEST_F(Logic, SimAddDegenerateShapes) {
  auto f = load_simadd_file(std::string(DIALECTICA_DATA_DIR) + "/simadd_plus.json");
  for (const auto& v : valuations()) {
    auto P = simadd_family(D, f->family(), v);
    auto [to, from] = simadd_degenerate_iso(D, P);
    EXPECT_EQ(to.dst(), interpret(D, *parse_formula("p + q"), v));
    EXPECT_EQ(D.compose(from, to), D.identity(to.src()));
    EXPECT_EQ(D.compose(to, from), D.identity(to.dst()));
  }
  for (unsigned mask = 0; mask < 4; ++mask) {
    auto Q = rules::family(D, mask, 1, 2);
    auto [to, from] = simadd_degenerate_iso(D, Q);
    EXPECT_EQ(to.dst(), D.with_(Q(Value::integer(0), Value::integer(0)), Q(Value::integer(0), Value::integer(1))));
    EXPECT_EQ(D.compose(from, to), D.identity(to.src()));
    EXPECT_EQ(D.compose(to, from), D.identity(to.dst()));
  }
}

TEST_F(Logic, SimAddRuleChecks) {
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 2; ++n) {
      auto c = simadd_rule_check(D, rules::instance(D, m, n));
      EXPECT_TRUE(D.well_typed(c)) << m << "," << n;
    }
  }
  auto bad = rules::instance(D, 1, 1);
  bad.f.push_back(bad.f[0]);
  EXPECT_THROW(simadd_rule_check(D, bad), Error);
}

TEST_F(Logic, SimAddPrinciples) {
  for (unsigned a = 0; a < 16; a += 3) {
    for (unsigned b = 0; b < 16; b += 5) {
      auto A = rules::family(D, a, 2, 2);
      auto B = rules::family(D, b, 2, 2);
      auto pc = parallel_choice_tensor(D, A, B);
      ASSERT_TRUE(pc.found()) << a << " " << b;
      EXPECT_TRUE(D.well_typed(*pc.witness));
      auto pd = plus_distribution(D, A, B);
      ASSERT_TRUE(pd.found()) << a << " " << b;
      EXPECT_TRUE(D.well_typed(*pd.witness));
    }
  }
}
