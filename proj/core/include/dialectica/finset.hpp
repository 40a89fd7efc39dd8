#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/value.hpp"

namespace dialectica {

// Enumeration caps shared by every set constructor.
struct Limits {
  std::uint64_t budget = 1'000'000;
  std::size_t multiset_bound = 2;
};

// A finite, or boundedly enumerated, set of symbolic values.
class EffectiveSet {
 public:
  using Membership = std::function<bool(const Value&)>;

  EffectiveSet();  // the empty set

  // Elements must be distinct.
  static EffectiveSet of(std::vector<Value> elements);
  static EffectiveSet symbols(std::initializer_list<std::string> names);
  static EffectiveSet range(std::size_t n);  // integers 0..n-1
  static EffectiveSet singleton();           // {*}
  // A bounded enumeration of a larger carrier decided by membership.
  static EffectiveSet truncated(std::vector<Value> elements, Membership membership);
  // A complete enumeration whose membership test avoids the element index.
  static EffectiveSet exact(std::vector<Value> elements, Membership membership);

  const std::vector<Value>& elements() const;
  std::size_t size() const;
  bool empty() const;
  bool is_truncated() const;
  const Value& operator[](std::size_t i) const;
  std::optional<std::size_t> index_of(const Value& v) const;
  bool contains(const Value& v) const;

  auto begin() const { return elements().begin(); }
  auto end() const { return elements().end(); }

  // Same enumeration and truncation flag.
  friend bool operator==(const EffectiveSet& a, const EffectiveSet& b);

  std::string to_string() const;

 private:
  struct Impl;
  explicit EffectiveSet(std::shared_ptr<const Impl> impl);
  static std::shared_ptr<Impl> make_impl(std::vector<Value> elements);
  std::shared_ptr<const Impl> impl_;
};

// A function between effective sets, tabulated on the enumerated domain.
// The optional rule extends it to domain members outside the enumeration.
class FiniteFunction {
 public:
  using Rule = std::function<Value(const Value&)>;

  FiniteFunction() = default;
  FiniteFunction(EffectiveSet domain, EffectiveSet codomain, std::vector<Value> table,
                 Rule rule = {});

  static FiniteFunction tabulate(EffectiveSet domain, EffectiveSet codomain, Rule rule);
  static FiniteFunction from_value(EffectiveSet domain, EffectiveSet codomain, const Value& graph);
  static FiniteFunction identity(const EffectiveSet& s);

  const EffectiveSet& domain() const { return domain_; }
  const EffectiveSet& codomain() const { return codomain_; }
  const std::vector<Value>& table() const { return table_; }
  bool has_rule() const { return static_cast<bool>(rule_); }

  Value operator()(const Value& x) const;
  const Value& at(std::size_t i) const { return table_[i]; }

  // this followed by next: x -> next(this(x)).
  FiniteFunction then(const FiniteFunction& next) const;

  // Graph over the enumerated domain.
  Value to_value() const;

  friend bool operator==(const FiniteFunction& a, const FiniteFunction& b);

 private:
  EffectiveSet domain_;
  EffectiveSet codomain_;
  std::vector<Value> table_;
  Rule rule_;
};

// |base|^exp with saturation at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
void check_budget(const std::string& what, std::uint64_t count, const Limits& limits);

EffectiveSet product(const EffectiveSet& a, const EffectiveSet& b);
EffectiveSet coproduct(const EffectiveSet& a, const EffectiveSet& b);
EffectiveSet function_space(const EffectiveSet& dom, const EffectiveSet& cod,
                            const Limits& limits = {});

using Family = std::function<EffectiveSet(const Value&)>;
EffectiveSet dependent_sum(const EffectiveSet& index, const Family& fam);
EffectiveSet dependent_product(const EffectiveSet& index, const Family& fam,
                               const Limits& limits = {});

// Multisets over carrier of size at most bound.
EffectiveSet multiset_space(const EffectiveSet& carrier, std::size_t bound,
                            const Limits& limits = {});

Value multiset_bind(const Value& l, const std::function<Value(const Value&)>& k);

// Y* x V* -> (Y + V)* and back.
Value multiset_coproduct_iso(const Value& pair);
Value multiset_coproduct_iso_inverse(const Value& m);

// Number of multisets of size at most bound over n elements.
std::uint64_t multiset_count_upto(std::uint64_t n, std::uint64_t bound);

}  // namespace dialectica
