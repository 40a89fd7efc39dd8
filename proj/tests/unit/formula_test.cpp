#include <gtest/gtest.h>

#include <random>

#include "dialectica/errors.hpp"
#include "dialectica/formula.hpp"
#include "oracles.hpp"

using namespace dialectica;
using K = Formula::Kind;

namespace {

FormulaPtr p() { return Formula::atom("p"); }
FormulaPtr q() { return Formula::atom("q"); }

std::size_t parse_error_at(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return SIZE_MAX;
}

// Random formulas over every connective except simultaneous additives.
FormulaPtr random_formula(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> pick(0, d == 0 ? 5 : 13);
  switch (pick(rng)) {
    case 0: return p();
    case 1: return q();
    case 2: return Formula::one();
    case 3: return Formula::bot();
    case 4: return Formula::top();
    case 5: return Formula::zero();
    case 6: return Formula::dual(random_formula(rng, d - 1));
    case 7: return Formula::bang(random_formula(rng, d - 1));
    case 8: return Formula::whynot(random_formula(rng, d - 1));
    case 9: return Formula::tensor(random_formula(rng, d - 1), random_formula(rng, d - 1));
    case 10: return Formula::par(random_formula(rng, d - 1), random_formula(rng, d - 1));
    case 11: return Formula::with_(random_formula(rng, d - 1), random_formula(rng, d - 1));
    case 12: return Formula::plus(random_formula(rng, d - 1), random_formula(rng, d - 1));
    default: return Formula::lollipop(random_formula(rng, d - 1), random_formula(rng, d - 1));
  }
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_EQ(*parse_formula("p -o p"), *Formula::lollipop(p(), p()));
  EXPECT_EQ(*parse_formula("bot * top"), *Formula::tensor(Formula::bot(), Formula::top()));
  EXPECT_EQ(*parse_formula("!(p & q)^"), *Formula::dual(Formula::bang(Formula::with_(p(), q()))));
  EXPECT_EQ(parse_formula("!((p & q)^)")->kind(), K::Bang);
  EXPECT_EQ(*parse_formula("0 + 1"), *Formula::plus(Formula::zero(), Formula::one()));
  EXPECT_EQ(*parse_formula("?p | q"), *Formula::par(Formula::whynot(p()), q()));
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(*parse_formula("p * q & p"), *Formula::with_(Formula::tensor(p(), q()), p()));
  EXPECT_EQ(*parse_formula("p -o q -o p"), *Formula::lollipop(p(), Formula::lollipop(q(), p())));
  EXPECT_EQ(*parse_formula("p * q * p"), *Formula::tensor(Formula::tensor(p(), q()), p()));
  EXPECT_EQ(*parse_formula("p + q -o q & p"),
            *Formula::lollipop(Formula::plus(p(), q()), Formula::with_(q(), p())));
  EXPECT_EQ(*parse_formula("p^^"), *Formula::dual(Formula::dual(p())));
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_at("p -o"), 4u);
  EXPECT_EQ(parse_error_at("(p"), 2u);
  EXPECT_EQ(parse_error_at("p q"), 2u);
  EXPECT_EQ(parse_error_at("P"), 0u);
  EXPECT_THROW(parse_formula(""), ParseError);
}

TEST(Parse, PrintedFormsParseBack) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    auto f = random_formula(rng, 1 + i % 4);
    auto text = f->to_string();
    EXPECT_EQ(*parse_formula(text), *f) << text;
  }
}

TEST(Formula, Measures) {
  auto f = parse_formula("!(p * q) -o ?q^");
  EXPECT_EQ(depth(*f), 3u);
  EXPECT_EQ(size(*f), 8u);
  EXPECT_EQ(atoms_of(*f), (std::vector<std::string>{"p", "q"}));
  EXPECT_TRUE(is_mell(*f));
  EXPECT_FALSE(is_mell(*parse_formula("p & q")));
  EXPECT_EQ(depth(*p()), 0u);
}

TEST(GenerateMell, CountsMatchTheRecurrence) {
  std::vector<FormulaPtr> leaves = {p(), q(), Formula::one(), Formula::bot()};
  for (std::size_t d = 0; d <= 2; ++d) {
    auto all = generate_mell(leaves, d);
    EXPECT_EQ(all.size(), oracle::mell_count(4, static_cast<int>(d))) << "depth " << d;
    for (std::size_t i = 0; i < all.size(); i += 97) {
      EXPECT_LE(depth(*all[i]), d);
      EXPECT_TRUE(is_mell(*all[i]));
    }
  }
  EXPECT_EQ(generate_mell({p()}, 1).size(), oracle::mell_count(1, 1));
}

TEST(SimAdd, RejectsEmptyIndexSets) {
  SimAddFamily fam{EffectiveSet(), EffectiveSet(), [](const Value&, const Value&) { return p(); }};
  EXPECT_THROW(Formula::simadd(fam), InvariantViolation);
}

TEST(SimAdd, LoadsDataFiles) {
  auto f = load_simadd_file(std::string(DIALECTICA_DATA_DIR) + "/simadd_2x2.json");
  ASSERT_EQ(f->kind(), K::SimAdd);
  const auto& fam = f->family();
  EXPECT_EQ(fam.X.size(), 2u);
  EXPECT_EQ(fam.Y.size(), 2u);
  EXPECT_EQ(*fam.fam(Value::symbol("b"), Value::integer(1)), *parse_formula("p -o q"));
  EXPECT_EQ(*fam.fam(Value::symbol("a"), Value::integer(0)), *p());

  auto g = load_simadd_file(std::string(DIALECTICA_DATA_DIR) + "/simadd_plus.json");
  EXPECT_EQ(g->family().Y.size(), 1u);
}

TEST(SimAdd, MalformedDocumentsAreRejected) {
  EXPECT_THROW(load_simadd(R"({"X": ["a"], "Y": [0], "fam": {}})"), ParseError);
  EXPECT_THROW(load_simadd(R"({"X": ["a"], "Y": [0]})"), ParseError);
  EXPECT_THROW(load_simadd(R"({"X": ["a"], "Y": [0], "fam": {"a,0": "p", "b,0": "q"}})"), ParseError);
  EXPECT_THROW(load_simadd(R"({"X": ["a"], "Y": [0], "fam": {"a,0": 3}})"), ParseError);
  EXPECT_THROW(load_simadd("{"), ParseError);
  EXPECT_THROW(load_simadd_file("/nonexistent/simadd.json"), ParseError);
}
