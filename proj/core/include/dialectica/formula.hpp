#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dialectica/finset.hpp"

namespace dialectica {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// The index sets and formula family of a simultaneous additive.
struct SimAddFamily {
  EffectiveSet X;
  EffectiveSet Y;
  std::function<FormulaPtr(const Value& x, const Value& y)> fam;
};

// Formulas of linear logic with simultaneous additives.
class Formula {
 public:
  enum class Kind {
    Atom, Dual, One, Bot, Top, Zero, Tensor, Par, With, Plus, Lollipop, Bang, Whynot, SimAdd
  };

  static FormulaPtr atom(std::string name);
  static FormulaPtr one();
  static FormulaPtr bot();
  static FormulaPtr top();
  static FormulaPtr zero();
  static FormulaPtr dual(FormulaPtr a);
  static FormulaPtr tensor(FormulaPtr a, FormulaPtr b);
  static FormulaPtr par(FormulaPtr a, FormulaPtr b);
  static FormulaPtr with_(FormulaPtr a, FormulaPtr b);
  static FormulaPtr plus(FormulaPtr a, FormulaPtr b);
  static FormulaPtr lollipop(FormulaPtr a, FormulaPtr b);
  static FormulaPtr bang(FormulaPtr a);
  static FormulaPtr whynot(FormulaPtr a);
  // Throws InvariantViolation when both index sets are empty.
  static FormulaPtr simadd(SimAddFamily family);

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }
  const SimAddFamily& family() const;

  bool is_unary() const;
  bool is_binary() const;
  bool is_constant() const;

  // Concrete syntax that parses back to the same tree (simultaneous
  // additives print as an opaque tag).
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 protected:
  Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right,
          std::shared_ptr<const SimAddFamily> family);

 private:
  Kind kind_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
  std::shared_ptr<const SimAddFamily> family_;
};

// Grammar: atoms [a-z][a-z0-9]*, constants 1 bot top 0, postfix ^, prefix !
// and ?, then * and | (left), then & and + (left), then -o (right).
// Throws ParseError with the offending position.
FormulaPtr parse_formula(std::string_view text);

std::vector<std::string> atoms_of(const Formula& f);
std::size_t depth(const Formula& f);
std::size_t size(const Formula& f);

// Multiplicative-exponential fragment: no additives or simultaneous additives.
bool is_mell(const Formula& f);

// All formulas of depth at most d over the leaves, built with dual, !, ?,
// tensor, par and lollipop.
std::vector<FormulaPtr> generate_mell(const std::vector<FormulaPtr>& leaves, std::size_t d);

// Loads a simultaneous additive from {"X": [..], "Y": [..], "fam": {"x,y": "<formula>"}}.
FormulaPtr load_simadd(std::string_view json_text);
FormulaPtr load_simadd_file(const std::string& path);

}  // namespace dialectica
