#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/errors.hpp"
#include "dialectica/finset.hpp"
#include "dialectica/value.hpp"

namespace dialectica {

// A double-indexed family G^X_Y of objects of a base model.
template <class Entry>
class Family2 {
 public:
  using Fam = std::function<Entry(const Value& x, const Value& y)>;

  Family2(EffectiveSet wit, EffectiveSet cowit, Fam fam)
      : impl_(std::make_shared<Impl>(std::move(wit), std::move(cowit), std::move(fam))) {
    if (impl_->wit.empty() && impl_->cowit.empty() && !impl_->wit.is_truncated() &&
        !impl_->cowit.is_truncated()) {
      throw InvariantViolation("witness and counter-witness sets are both empty");
    }
  }

  const EffectiveSet& wit() const { return impl_->wit; }
  const EffectiveSet& cowit() const { return impl_->cowit; }
  const Fam& fam() const { return impl_->fam; }

  // Entry at enumerated positions.
  const Entry& at(std::size_t xi, std::size_t yi) const {
    return table()[xi * impl_->cowit.size() + yi];
  }

  // Entry at any members, enumerated or not.
  Entry operator()(const Value& x, const Value& y) const {
    auto xi = impl_->wit.index_of(x);
    auto yi = impl_->cowit.index_of(y);
    if (xi && yi) return at(*xi, *yi);
    return impl_->fam(x, y);
  }

  // Row-major table over enumerated wit x cowit.
  const std::vector<Entry>& table() const {
    std::call_once(impl_->once, [this] {
      auto& t = impl_->table;
      t.reserve(impl_->wit.size() * impl_->cowit.size());
      for (const auto& x : impl_->wit) {
        for (const auto& y : impl_->cowit) t.push_back(impl_->fam(x, y));
      }
    });
    return impl_->table;
  }

  bool same(const Family2& other) const { return impl_ == other.impl_; }

  friend bool operator==(const Family2& a, const Family2& b) {
    if (a.impl_ == b.impl_) return true;
    return a.wit() == b.wit() && a.cowit() == b.cowit() && a.table() == b.table();
  }

 private:
  struct Impl {
    Impl(EffectiveSet w, EffectiveSet c, Fam f)
        : wit(std::move(w)), cowit(std::move(c)), fam(std::move(f)) {}
    EffectiveSet wit;
    EffectiveSet cowit;
    Fam fam;
    mutable std::once_flag once;
    mutable std::vector<Entry> table;
  };
  std::shared_ptr<Impl> impl_;
};

template <class B>
using DialObject = Family2<typename B::Object>;

// A morphism (f, g, alpha) : G -> H with f : X -> U, g : V -> Y and
// alpha(x, v) : G(x, g v) -> H(f x, v).
template <class B>
class DialMorphism {
 public:
  using Object = DialObject<B>;
  using BaseMorphism = typename B::Morphism;
  using AlphaRule = std::function<BaseMorphism(const Value& x, const Value& v)>;

  DialMorphism(Object src, Object dst, FiniteFunction f, FiniteFunction g,
               std::vector<BaseMorphism> alpha, AlphaRule rule = {})
      : src_(std::move(src)),
        dst_(std::move(dst)),
        f_(std::move(f)),
        g_(std::move(g)),
        alpha_(std::move(alpha)),
        rule_(std::move(rule)) {
    if (!(f_.domain() == src_.wit()) || !(f_.codomain() == dst_.wit())) {
      throw InvariantViolation("forward map does not go between witness sets");
    }
    if (!(g_.domain() == dst_.cowit()) || !(g_.codomain() == src_.cowit())) {
      throw InvariantViolation("backward map does not go between counter-witness sets");
    }
    if (alpha_.size() != src_.wit().size() * dst_.cowit().size()) {
      throw InvariantViolation("alpha table is not total");
    }
  }

  const Object& src() const { return src_; }
  const Object& dst() const { return dst_; }
  const FiniteFunction& f() const { return f_; }
  const FiniteFunction& g() const { return g_; }
  const std::vector<BaseMorphism>& alpha_table() const { return alpha_; }
  const AlphaRule& alpha_rule() const { return rule_; }

  const BaseMorphism& alpha(std::size_t xi, std::size_t vi) const {
    return alpha_[xi * dst_.cowit().size() + vi];
  }

  BaseMorphism alpha_at(const Value& x, const Value& v) const {
    auto xi = src_.wit().index_of(x);
    auto vi = dst_.cowit().index_of(v);
    if (xi && vi) return alpha(*xi, *vi);
    if (rule_) return rule_(x, v);
    throw TruncationMiss("alpha component undefined at (" + x.to_string() + ", " + v.to_string() +
                         ")");
  }

  friend bool operator==(const DialMorphism& a, const DialMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.f_ == b.f_ && a.g_ == b.g_ &&
           a.alpha_ == b.alpha_;
  }

 private:
  Object src_;
  Object dst_;
  FiniteFunction f_;
  FiniteFunction g_;
  std::vector<BaseMorphism> alpha_;
  AlphaRule rule_;
};

template <class B>
concept PosetalBase = requires(const B& b, const typename B::Object& o) {
  { b.arrow(o, o) } -> std::same_as<std::optional<typename B::Morphism>>;
  { b.leq(o, o) } -> std::same_as<bool>;
};

template <class B>
concept ExponentialBase = requires(const B& b, const typename B::Object& o,
                                   const typename B::Morphism& m) {
  { b.bang(o) } -> std::same_as<typename B::Object>;
  { b.bang(m) } -> std::same_as<typename B::Morphism>;
};

// Fold of the base tensor over a list; the empty fold is the unit.
template <class B>
typename B::Object tensor_fold(const B& base, const std::vector<typename B::Object>& xs) {
  if (xs.empty()) return base.unit();
  typename B::Object acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = base.tensor(acc, xs[i]);
  return acc;
}

template <class B>
typename B::Morphism tensor_fold_morphism(const B& base,
                                          const std::vector<typename B::Morphism>& ms) {
  if (ms.empty()) return base.identity(base.unit());
  typename B::Morphism acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = base.tensor(acc, ms[i]);
  return acc;
}

}  // namespace dialectica
