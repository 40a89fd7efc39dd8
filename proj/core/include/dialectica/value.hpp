#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace dialectica {

// Immutable symbolic value used for every element of every index set.
// Values are nested tagged tuples with a canonical total order, so sets,
// functions and multisets built from them compare deterministically.
class Value {
 public:
  enum class Kind : std::uint8_t { Unit, Symbol, Integer, Tuple, Inl, Inr, Function, Multiset };

  Value();  // the unit value *

  static Value unit();
  static Value symbol(std::string name);
  static Value integer(std::int64_t n);
  static Value tuple(std::vector<Value> items);
  static Value pair(Value a, Value b);
  static Value inl(Value v);
  static Value inr(Value v);
  // Entries need not be sorted; duplicate keys are rejected.
  static Value function(std::vector<std::pair<Value, Value>> entries);
  static Value multiset(std::vector<Value> items);

  Kind kind() const noexcept;
  bool is(Kind k) const noexcept { return kind() == k; }

  const std::string& name() const;
  std::int64_t as_integer() const;

  // Tuple components, or multiset items in canonical order.
  const std::vector<Value>& items() const;
  const Value& operator[](std::size_t i) const;
  std::size_t arity() const;
  const Value& first() const { return (*this)[0]; }
  const Value& second() const { return (*this)[1]; }

  // Payload of an inl/inr value.
  const Value& payload() const;

  // Function graph: keys in canonical order with matching values.
  const std::vector<Value>& keys() const;
  const std::vector<Value>& values() const;
  const Value* lookup(const Value& key) const;
  const Value& apply(const Value& key) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Value& a, const Value& b) noexcept;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept;

  std::string to_string() const;

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

struct ValueHash {
  std::size_t operator()(const Value& v) const noexcept { return v.hash(); }
};

// Multiset helpers; a multiset is a Value of kind Multiset.
Value multiset_empty();
Value multiset_singleton(const Value& v);
Value multiset_union(const Value& a, const Value& b);
std::size_t multiset_count(const Value& m, const Value& item);

}  // namespace dialectica

template <>
struct std::hash<dialectica::Value> {
  std::size_t operator()(const dialectica::Value& v) const noexcept { return v.hash(); }
};
