#include "dialectica/value.hpp"

#include <algorithm>
#include <ostream>

#include "dialectica/errors.hpp"

namespace dialectica {

struct Value::Node {
  Kind kind = Kind::Unit;
  std::int64_t number = 0;
  std::string name;
  std::vector<Value> items;   // tuple, multiset, payload, or function keys
  std::vector<Value> values;  // function values
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Value::Value() : Value(unit()) {}

Value::Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

std::size_t compute_hash(Value::Kind kind, std::int64_t number, const std::string& name,
                         const std::vector<Value>& items, const std::vector<Value>& values) {
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  h = mix(h, std::hash<std::int64_t>{}(number));
  h = mix(h, std::hash<std::string>{}(name));
  for (const auto& v : items) h = mix(h, v.hash());
  h = mix(h, 0xabcdef);
  for (const auto& v : values) h = mix(h, v.hash());
  return h;
}

}  // namespace

Value Value::unit() {
  static const Value u = [] {
    auto n = std::make_shared<Node>();
    n->hash = compute_hash(Kind::Unit, 0, {}, {}, {});
    return Value(std::move(n));
  }();
  return u;
}

Value Value::symbol(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Symbol;
  n->name = std::move(name);
  n->hash = compute_hash(n->kind, 0, n->name, {}, {});
  return Value(std::move(n));
}

Value Value::integer(std::int64_t v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Integer;
  n->number = v;
  n->hash = compute_hash(n->kind, v, {}, {}, {});
  return Value(std::move(n));
}

Value Value::tuple(std::vector<Value> items) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tuple;
  n->items = std::move(items);
  n->hash = compute_hash(n->kind, 0, {}, n->items, {});
  return Value(std::move(n));
}

Value Value::pair(Value a, Value b) { return tuple({std::move(a), std::move(b)}); }

Value Value::inl(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inl;
  n->items.push_back(std::move(v));
  n->hash = compute_hash(n->kind, 0, {}, n->items, {});
  return Value(std::move(n));
}

Value Value::inr(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inr;
  n->items.push_back(std::move(v));
  n->hash = compute_hash(n->kind, 0, {}, n->items, {});
  return Value(std::move(n));
}

Value Value::function(std::vector<std::pair<Value, Value>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto n = std::make_shared<Node>();
  n->kind = Kind::Function;
  n->items.reserve(entries.size());
  n->values.reserve(entries.size());
  for (auto& [k, v] : entries) {
    if (!n->items.empty() && n->items.back() == k) {
      throw InvariantViolation("function value has duplicate key " + k.to_string());
    }
    n->items.push_back(std::move(k));
    n->values.push_back(std::move(v));
  }
  n->hash = compute_hash(n->kind, 0, {}, n->items, n->values);
  return Value(std::move(n));
}

Value Value::multiset(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  auto n = std::make_shared<Node>();
  n->kind = Kind::Multiset;
  n->items = std::move(items);
  n->hash = compute_hash(n->kind, 0, {}, n->items, {});
  return Value(std::move(n));
}

Value::Kind Value::kind() const noexcept { return node_->kind; }

const std::string& Value::name() const {
  if (node_->kind != Kind::Symbol) throw InvariantViolation("not a symbol: " + to_string());
  return node_->name;
}

std::int64_t Value::as_integer() const {
  if (node_->kind != Kind::Integer) throw InvariantViolation("not an integer: " + to_string());
  return node_->number;
}

const std::vector<Value>& Value::items() const {
  if (node_->kind != Kind::Tuple && node_->kind != Kind::Multiset) {
    throw InvariantViolation("not a tuple or multiset: " + to_string());
  }
  return node_->items;
}

const Value& Value::operator[](std::size_t i) const {
  if (node_->kind != Kind::Tuple || i >= node_->items.size()) {
    throw InvariantViolation("tuple index " + std::to_string(i) + " out of range in " +
                             to_string());
  }
  return node_->items[i];
}

std::size_t Value::arity() const { return items().size(); }

const Value& Value::payload() const {
  if (node_->kind != Kind::Inl && node_->kind != Kind::Inr) {
    throw InvariantViolation("not an injection: " + to_string());
  }
  return node_->items[0];
}

const std::vector<Value>& Value::keys() const {
  if (node_->kind != Kind::Function) throw InvariantViolation("not a function: " + to_string());
  return node_->items;
}

const std::vector<Value>& Value::values() const {
  if (node_->kind != Kind::Function) throw InvariantViolation("not a function: " + to_string());
  return node_->values;
}

const Value* Value::lookup(const Value& key) const {
  const auto& ks = keys();
  auto it = std::lower_bound(ks.begin(), ks.end(), key);
  if (it == ks.end() || *it != key) return nullptr;
  return &node_->values[static_cast<std::size_t>(it - ks.begin())];
}

const Value& Value::apply(const Value& key) const {
  if (const Value* v = lookup(key)) return *v;
  throw TruncationMiss("function " + to_string() + " undefined at " + key.to_string());
}

std::size_t Value::hash() const noexcept { return node_->hash; }

bool operator==(const Value& a, const Value& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

namespace {

std::strong_ordering compare_lists(const std::vector<Value>& a, const std::vector<Value>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering operator<=>(const Value& a, const Value& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  switch (x.kind) {
    case Value::Kind::Unit:
      return std::strong_ordering::equal;
    case Value::Kind::Symbol:
      return x.name.compare(y.name) <=> 0;
    case Value::Kind::Integer:
      return x.number <=> y.number;
    case Value::Kind::Function:
      if (auto c = compare_lists(x.items, y.items); c != 0) return c;
      return compare_lists(x.values, y.values);
    default:
      return compare_lists(x.items, y.items);
  }
}

std::string Value::to_string() const {
  const auto& n = *node_;
  auto join = [](const std::vector<Value>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) s += ", ";
      s += vs[i].to_string();
    }
    return s;
  };
  switch (n.kind) {
    case Kind::Unit:
      return "*";
    case Kind::Symbol:
      return n.name;
    case Kind::Integer:
      return std::to_string(n.number);
    case Kind::Tuple:
      return "(" + join(n.items) + ")";
    case Kind::Inl:
      return "inl(" + n.items[0].to_string() + ")";
    case Kind::Inr:
      return "inr(" + n.items[0].to_string() + ")";
    case Kind::Function: {
      std::string s = "{";
      for (std::size_t i = 0; i < n.items.size(); ++i) {
        if (i) s += ", ";
        s += n.items[i].to_string() + "->" + n.values[i].to_string();
      }
      return s + "}";
    }
    case Kind::Multiset:
      return "[" + join(n.items) + "]";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.to_string(); }

Value multiset_empty() { return Value::multiset({}); }

Value multiset_singleton(const Value& v) { return Value::multiset({v}); }

Value multiset_union(const Value& a, const Value& b) {
  std::vector<Value> items = a.items();
  items.insert(items.end(), b.items().begin(), b.items().end());
  return Value::multiset(std::move(items));
}

std::size_t multiset_count(const Value& m, const Value& item) {
  const auto& xs = m.items();
  auto [lo, hi] = std::equal_range(xs.begin(), xs.end(), item);
  return static_cast<std::size_t>(hi - lo);
}

}  // namespace dialectica
