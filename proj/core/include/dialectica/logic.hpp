#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/formula.hpp"
#include "dialectica/functors.hpp"

namespace dialectica {

using Valuation = std::map<std::string, Elem>;
using TwoLevelObject = Family2<LObject>;

// "p=1" style assignments, element names resolved in the lineale.
Valuation parse_valuation(const Lineale& r, const std::vector<std::string>& assignments);

// Throws ContractViolation for an unassigned atom and ShapeUnsupported for
// additives over a lineale without products.
LObject interpret(const LinearModel& model, const Formula& f, const Valuation& v);

// The value of f in the lineale itself.  Simultaneous additives have none
// and throw ShapeUnsupported.
Elem interpret_base(const Lineale& r, const Formula& f, const Valuation& v);

// True when a (x) a = a for every element; multiset bounds then do not change verdicts.
bool idempotent(const Lineale& r);

struct ValidityResult {
  bool valid = false;
  bool wit_truncated = false;
  bool cowit_truncated = false;
  bool bound_independent = false;
  std::size_t bound = 0;
  std::optional<Value> witness;
  std::vector<std::pair<Value, Arrow>> strategy;    // y -> (1 -> G(x, y))
  std::vector<std::pair<Value, Value>> refutation;  // each x with a y where 1 -> G(x, y) fails
  std::size_t witnesses = 0;
  std::size_t counter_witnesses = 0;

  // Whether any universally quantified side was cut off at the multiset bound.
  bool truncated() const { return cowit_truncated || wit_truncated; }
  // "valid", "valid-at-bound-k", "invalid" or "invalid-at-bound-k".
  std::string verdict() const;
};

// Some x with 1 -> G(x, y) for every enumerated y.
ValidityResult is_valid(const LinearModel& model, const LObject& G);
ValidityResult is_valid(const LinearModel& model, const Formula& f, const Valuation& v);

// For the interpretation G of f: a witness x with [[f]] -> G(x, y) for every
// y, and a counter-witness y with G(x, y) -> [[f]] for every x.
struct CompletenessWitness {
  LObject object;
  Elem value;
  Value x;
  Value y;
  std::vector<Arrow> pi;     // per enumerated y
  std::vector<Arrow> sigma;  // per enumerated x
  bool pi_typed = false;
  bool sigma_typed = false;
  bool typed() const { return pi_typed && sigma_typed; }
};

// Defined on the multiplicative-exponential fragment; other formulas throw
// ShapeUnsupported.
CompletenessWitness completeness_witnesses(const LinearModel& model, const Formula& f,
                                           const Valuation& v);

struct RelativeCompleteness {
  ValidityResult validity;
  bool base_valid = false;
  std::optional<Arrow> composed;  // 1 -> [[f]] via the strategy at the counter-witness
  // A verdict of validity implies validity in the lineale.
  bool consistent() const { return !validity.valid || composed.has_value(); }
};

// Throws ContractViolation if the composite cannot be formed.
RelativeCompleteness relative_completeness(const LinearModel& model, const Formula& f,
                                           const Valuation& v);

// ---- simultaneous additives ----

TwoLevelObject simadd_family(const LinearModel& model, const SimAddFamily& fam, const Valuation& v);
LObject simadd_interpret(const LinearModel& model, const SimAddFamily& fam, const Valuation& v);

// With |Y| = 1 the simultaneous additive is the plus of its entries and with
// |X| = 1 it is their with; returns mutually inverse morphisms to and from
// that object.  Other shapes throw ShapeUnsupported.
std::pair<LMorphism, LMorphism> simadd_degenerate_iso(const LinearModel& model,
                                                      const TwoLevelObject& P);

using IndexRule = std::function<Value(const std::vector<Value>& xs, const std::vector<Value>& vs)>;

// Premises Phi_1..Phi_m |- Psi_1..Psi_n with m, n in {1, 2}.  f[j] yields
// u_j and ignores vs[j]; g[i] yields y_i and ignores xs[i].  premise(xs, vs)
// goes from the tensor of Phi_i(x_i, y_i) to the par of Psi_j(u_j, v_j);
// when it is empty each premise is found by the hom solver.
struct SimAddRule {
  std::vector<TwoLevelObject> left;
  std::vector<TwoLevelObject> right;
  std::vector<IndexRule> f;
  std::vector<IndexRule> g;
  std::function<LMorphism(const std::vector<Value>& xs, const std::vector<Value>& vs)> premise;
};

// The conclusion morphism from the tensor of mu Phi_i to the par of mu Psi_j.
// Throws ShapeUnsupported outside m, n <= 2 and ContractViolation when a
// premise has the wrong type.
LMorphism simadd_rule_check(const LinearModel& model, const SimAddRule& rule);

struct PrincipleReport {
  std::string name;
  LObject lhs;
  LObject rhs;
  std::optional<LMorphism> witness;
  bool found() const { return witness.has_value(); }
};

// mu(Phi (x) Psi) -o mu Phi (x) mu Psi.
PrincipleReport parallel_choice_tensor(const LinearModel& model, const TwoLevelObject& Phi,
                                       const TwoLevelObject& Psi);
// mu(Phi + Psi) -o mu Phi + mu Psi.
PrincipleReport plus_distribution(const LinearModel& model, const TwoLevelObject& Phi,
                                  const TwoLevelObject& Psi);

// bot (x) top together with mutually inverse morphisms to and from top.
struct BotTensorTop {
  LObject object;
  LMorphism to_top;
  LMorphism from_top;
  bool inverse = false;
};
BotTensorTop bot_tensor_top_iso(const LinearModel& model);

}  // namespace dialectica
