#include "dialectica/finset.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "dialectica/errors.hpp"

namespace dialectica {

struct EffectiveSet::Impl {
  std::vector<Value> elements;
  std::unordered_map<Value, std::size_t, ValueHash> index;
  bool truncated = false;
  Membership membership;
};

EffectiveSet::EffectiveSet() : EffectiveSet(of({})) {}

EffectiveSet::EffectiveSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

std::shared_ptr<EffectiveSet::Impl> EffectiveSet::make_impl(std::vector<Value> elements) {
  auto impl = std::make_shared<EffectiveSet::Impl>();
  impl->index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!impl->index.emplace(elements[i], i).second) {
      throw InvariantViolation("duplicate set element " + elements[i].to_string());
    }
  }
  impl->elements = std::move(elements);
  return impl;
}

EffectiveSet EffectiveSet::of(std::vector<Value> elements) {
  return EffectiveSet(make_impl(std::move(elements)));
}

EffectiveSet EffectiveSet::symbols(std::initializer_list<std::string> names) {
  std::vector<Value> xs;
  for (const auto& n : names) xs.push_back(Value::symbol(n));
  return of(std::move(xs));
}

EffectiveSet EffectiveSet::range(std::size_t n) {
  std::vector<Value> xs;
  xs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) xs.push_back(Value::integer(static_cast<std::int64_t>(i)));
  return of(std::move(xs));
}

EffectiveSet EffectiveSet::singleton() {
  static const EffectiveSet s = of({Value::unit()});
  return s;
}

EffectiveSet EffectiveSet::truncated(std::vector<Value> elements, Membership membership) {
  auto impl = make_impl(std::move(elements));
  impl->truncated = true;
  impl->membership = std::move(membership);
  return EffectiveSet(std::move(impl));
}

EffectiveSet EffectiveSet::exact(std::vector<Value> elements, Membership membership) {
  auto impl = make_impl(std::move(elements));
  impl->membership = std::move(membership);
  return EffectiveSet(std::move(impl));
}

const std::vector<Value>& EffectiveSet::elements() const { return impl_->elements; }
std::size_t EffectiveSet::size() const { return impl_->elements.size(); }
bool EffectiveSet::empty() const { return impl_->elements.empty(); }
bool EffectiveSet::is_truncated() const { return impl_->truncated; }
const Value& EffectiveSet::operator[](std::size_t i) const { return impl_->elements[i]; }

std::optional<std::size_t> EffectiveSet::index_of(const Value& v) const {
  auto it = impl_->index.find(v);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

bool EffectiveSet::contains(const Value& v) const {
  if (impl_->index.count(v)) return true;
  return impl_->truncated && impl_->membership && impl_->membership(v);
}

bool operator==(const EffectiveSet& a, const EffectiveSet& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->truncated == b.impl_->truncated && a.impl_->elements == b.impl_->elements;
}

std::string EffectiveSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ", ";
    s += (*this)[i].to_string();
  }
  if (is_truncated()) s += size() ? ", ..." : "...";
  return s + "}";
}

FiniteFunction::FiniteFunction(EffectiveSet domain, EffectiveSet codomain, std::vector<Value> table,
                               Rule rule)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      table_(std::move(table)),
      rule_(std::move(rule)) {
  if (table_.size() != domain_.size()) {
    throw InvariantViolation("function table is not total on its domain");
  }
  for (const auto& v : table_) {
    if (!codomain_.contains(v)) {
      throw InvariantViolation("function output " + v.to_string() + " outside codomain " +
                               codomain_.to_string());
    }
  }
}

FiniteFunction FiniteFunction::tabulate(EffectiveSet domain, EffectiveSet codomain, Rule rule) {
  std::vector<Value> table;
  table.reserve(domain.size());
  for (const auto& x : domain) table.push_back(rule(x));
  Rule extension = domain.is_truncated() ? rule : Rule{};
  return FiniteFunction(std::move(domain), std::move(codomain), std::move(table),
                        std::move(extension));
}

FiniteFunction FiniteFunction::from_value(EffectiveSet domain, EffectiveSet codomain,
                                          const Value& graph) {
  std::vector<Value> table;
  table.reserve(domain.size());
  for (const auto& x : domain) table.push_back(graph.apply(x));
  return FiniteFunction(std::move(domain), std::move(codomain), std::move(table));
}

FiniteFunction FiniteFunction::identity(const EffectiveSet& s) {
  return FiniteFunction(s, s, s.elements(), [](const Value& v) { return v; });
}

Value FiniteFunction::operator()(const Value& x) const {
  if (auto i = domain_.index_of(x)) return table_[*i];
  if (rule_ && domain_.contains(x)) return rule_(x);
  throw TruncationMiss("function undefined at " + x.to_string() + " (domain " +
                       domain_.to_string() + ")");
}

FiniteFunction FiniteFunction::then(const FiniteFunction& next) const {
  std::vector<Value> table;
  table.reserve(table_.size());
  for (const auto& y : table_) table.push_back(next(y));
  Rule rule;
  if (rule_) {
    rule = [first = *this, next](const Value& x) { return next(first(x)); };
  }
  return FiniteFunction(domain_, next.codomain_, std::move(table), std::move(rule));
}

Value FiniteFunction::to_value() const {
  std::vector<std::pair<Value, Value>> entries;
  entries.reserve(table_.size());
  for (std::size_t i = 0; i < table_.size(); ++i) entries.emplace_back(domain_[i], table_[i]);
  return Value::function(std::move(entries));
}

bool operator==(const FiniteFunction& a, const FiniteFunction& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.table_ == b.table_;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    r = saturating_mul(r, base);
    if (r == 0 || r == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return r;
}

void check_budget(const std::string& what, std::uint64_t count, const Limits& limits) {
  if (count > limits.budget) throw BudgetExceeded(what, count, limits.budget);
}

EffectiveSet product(const EffectiveSet& a, const EffectiveSet& b) {
  std::vector<Value> xs;
  xs.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) xs.push_back(Value::pair(x, y));
  }
  auto member = [a, b](const Value& v) {
    return v.is(Value::Kind::Tuple) && v.arity() == 2 && a.contains(v[0]) && b.contains(v[1]);
  };
  if (a.is_truncated() || b.is_truncated()) return EffectiveSet::truncated(std::move(xs), member);
  return EffectiveSet::of(std::move(xs));
}

EffectiveSet coproduct(const EffectiveSet& a, const EffectiveSet& b) {
  std::vector<Value> xs;
  xs.reserve(a.size() + b.size());
  for (const auto& x : a) xs.push_back(Value::inl(x));
  for (const auto& y : b) xs.push_back(Value::inr(y));
  auto member = [a, b](const Value& v) {
    if (v.is(Value::Kind::Inl)) return a.contains(v.payload());
    if (v.is(Value::Kind::Inr)) return b.contains(v.payload());
    return false;
  };
  if (a.is_truncated() || b.is_truncated()) return EffectiveSet::truncated(std::move(xs), member);
  return EffectiveSet::of(std::move(xs));
}

namespace {

// Enumerates all choice functions index -> fibers in lexicographic order.
std::vector<Value> choice_functions(const EffectiveSet& index,
                                    const std::vector<EffectiveSet>& fibers) {
  std::vector<Value> out;
  for (const auto& f : fibers) {
    if (f.empty()) return out;
  }
  std::vector<std::size_t> digit(index.size(), 0);
  while (true) {
    std::vector<std::pair<Value, Value>> entries;
    entries.reserve(index.size());
    for (std::size_t i = 0; i < index.size(); ++i) entries.emplace_back(index[i], fibers[i][digit[i]]);
    out.push_back(Value::function(std::move(entries)));
    std::size_t k = index.size();
    while (k > 0) {
      --k;
      if (++digit[k] < fibers[k].size()) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (index.size() == 0) return out;
  }
}

bool is_choice_function(const Value& v, const EffectiveSet& index, const Family& fam) {
  if (!v.is(Value::Kind::Function)) return false;
  const auto& ks = v.keys();
  if (!index.is_truncated() && ks.size() != index.size()) return false;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (!index.contains(ks[i])) return false;
    if (!fam(ks[i]).contains(v.values()[i])) return false;
  }
  for (const auto& x : index) {
    if (!v.lookup(x)) return false;
  }
  return true;
}

}  // namespace

EffectiveSet function_space(const EffectiveSet& dom, const EffectiveSet& cod, const Limits& limits) {
  check_budget("function space " + std::to_string(cod.size()) + "^" + std::to_string(dom.size()),
               saturating_pow(cod.size(), dom.size()), limits);
  std::vector<EffectiveSet> fibers(dom.size(), cod);
  auto xs = choice_functions(dom, fibers);
  Family constant = [cod](const Value&) { return cod; };
  auto member = [dom, constant](const Value& v) { return is_choice_function(v, dom, constant); };
  bool truncated = dom.is_truncated() || (cod.is_truncated() && !dom.empty());
  if (truncated) return EffectiveSet::truncated(std::move(xs), member);
  return EffectiveSet::exact(std::move(xs), member);
}

EffectiveSet dependent_sum(const EffectiveSet& index, const Family& fam) {
  std::vector<Value> xs;
  bool truncated = index.is_truncated();
  for (const auto& i : index) {
    auto fiber = fam(i);
    truncated = truncated || fiber.is_truncated();
    for (const auto& e : fiber) xs.push_back(Value::pair(i, e));
  }
  auto member = [index, fam](const Value& v) {
    return v.is(Value::Kind::Tuple) && v.arity() == 2 && index.contains(v[0]) &&
           fam(v[0]).contains(v[1]);
  };
  if (truncated) return EffectiveSet::truncated(std::move(xs), member);
  return EffectiveSet::of(std::move(xs));
}

EffectiveSet dependent_product(const EffectiveSet& index, const Family& fam, const Limits& limits) {
  std::vector<EffectiveSet> fibers;
  fibers.reserve(index.size());
  std::uint64_t count = 1;
  bool truncated = index.is_truncated();
  bool any_empty = false;
  for (const auto& i : index) {
    fibers.push_back(fam(i));
    count = saturating_mul(count, fibers.back().size());
    any_empty = any_empty || fibers.back().empty();
  }
  for (const auto& f : fibers) truncated = truncated || (f.is_truncated() && !any_empty);
  check_budget("dependent product", count, limits);
  auto xs = choice_functions(index, fibers);
  auto member = [index, fam](const Value& v) { return is_choice_function(v, index, fam); };
  if (truncated) return EffectiveSet::truncated(std::move(xs), member);
  return EffectiveSet::exact(std::move(xs), member);
}

std::uint64_t multiset_count_upto(std::uint64_t n, std::uint64_t bound) {
  // C(n + bound, bound)
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    r = saturating_mul(r, n + i);
    if (r == std::numeric_limits<std::uint64_t>::max()) return r;
    r /= i;
  }
  return r;
}

EffectiveSet multiset_space(const EffectiveSet& carrier, std::size_t bound, const Limits& limits) {
  if (carrier.empty()) {
    return EffectiveSet::of({multiset_empty()});
  }
  check_budget("multiset space", multiset_count_upto(carrier.size(), bound), limits);
  std::vector<Value> xs;
  std::vector<std::size_t> pick;
  // Non-decreasing index sequences of each length, in length-then-lexicographic order.
  for (std::size_t len = 0; len <= bound; ++len) {
    pick.assign(len, 0);
    while (true) {
      std::vector<Value> items;
      items.reserve(len);
      for (auto p : pick) items.push_back(carrier[p]);
      xs.push_back(Value::multiset(std::move(items)));
      std::size_t k = len;
      bool done = true;
      while (k > 0) {
        --k;
        if (pick[k] + 1 < carrier.size()) {
          ++pick[k];
          for (std::size_t j = k + 1; j < len; ++j) pick[j] = pick[k];
          done = false;
          break;
        }
      }
      if (done) break;
    }
  }
  auto member = [carrier](const Value& v) {
    if (!v.is(Value::Kind::Multiset)) return false;
    for (const auto& e : v.items()) {
      if (!carrier.contains(e)) return false;
    }
    return true;
  };
  return EffectiveSet::truncated(std::move(xs), member);
}

Value multiset_bind(const Value& l, const std::function<Value(const Value&)>& k) {
  std::vector<Value> out;
  for (const auto& a : l.items()) {
    const Value m = k(a);
    out.insert(out.end(), m.items().begin(), m.items().end());
  }
  return Value::multiset(std::move(out));
}

Value multiset_coproduct_iso(const Value& pair) {
  std::vector<Value> out;
  for (const auto& y : pair[0].items()) out.push_back(Value::inl(y));
  for (const auto& v : pair[1].items()) out.push_back(Value::inr(v));
  return Value::multiset(std::move(out));
}

Value multiset_coproduct_iso_inverse(const Value& m) {
  std::vector<Value> left, right;
  for (const auto& z : m.items()) {
    if (z.is(Value::Kind::Inl)) {
      left.push_back(z.payload());
    } else if (z.is(Value::Kind::Inr)) {
      right.push_back(z.payload());
    } else {
      throw InvariantViolation("multiset entry " + z.to_string() + " is not a coproduct element");
    }
  }
  return Value::pair(Value::multiset(std::move(left)), Value::multiset(std::move(right)));
}

}  // namespace dialectica
