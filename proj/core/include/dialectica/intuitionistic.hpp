#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/dial_object.hpp"
#include "dialectica/errors.hpp"
#include "dialectica/finset.hpp"
#include "dialectica/lineale.hpp"

namespace dialectica {

template <class S>
concept CartesianPosetalBase = PosetalBase<S> && requires(const S& s, const typename S::Object& o) {
  { s.product(o, o) } -> std::same_as<typename S::Object>;
  { s.terminal() } -> std::same_as<typename S::Object>;
};

// The cartesian category S of a lineale: the fixed points of !, with the
// tensor as binary product and the unit as terminal object.
class NonlinearPart {
 public:
  using Object = Elem;
  using Morphism = Arrow;

  explicit NonlinearPart(Lineale r) : r_(std::move(r)) {
    if (!r_.has_exponential()) throw ContractViolation("lineale has no exponential");
  }

  const Lineale& linear() const { return r_; }
  std::vector<Elem> objects() const { return r_.nonlinear_objects(); }
  bool contains(Elem a) const { return r_.is_nonlinear(a); }

  bool leq(Elem a, Elem b) const { return r_.leq(a, b); }
  std::optional<Arrow> arrow(Elem a, Elem b) const { return r_.arrow(a, b); }
  std::vector<Arrow> hom(Elem a, Elem b) const { return r_.hom(a, b); }
  Elem source(const Arrow& f) const { return f.src; }
  Elem target(const Arrow& f) const { return f.dst; }
  Arrow identity(Elem a) const { return {a, a}; }
  Arrow compose(const Arrow& g, const Arrow& f) const { return r_.compose(g, f); }
  Elem product(Elem a, Elem b) const { return r_.tensor(a, b); }
  Elem terminal() const { return r_.unit(); }
  std::string to_string(Elem a) const { return r_.name(a); }

 private:
  Lineale r_;
};

// Product of G(x, y) over the entries y of a multiset; the empty product is terminal.
template <CartesianPosetalBase S>
typename S::Object product_over(const S& s, const Family2<typename S::Object>& G, const Value& x,
                                const Value& ms) {
  auto acc = s.terminal();
  bool started = false;
  for (const auto& y : ms.items()) {
    acc = started ? s.product(acc, G(x, y)) : G(x, y);
    started = true;
  }
  return acc;
}

// A morphism (f, g, alpha) of the Diller-Nahm category with f : X -> U,
// g : X x V -> Y* and alpha(x, v) : prod_{y in g(x, v)} G(x, y) -> H(f x, v).
template <CartesianPosetalBase S>
class DiMorphism {
 public:
  using Object = Family2<typename S::Object>;
  using BaseMorphism = typename S::Morphism;

  DiMorphism(Object src, Object dst, FiniteFunction f, FiniteFunction g,
             std::vector<BaseMorphism> alpha)
      : src_(std::move(src)), dst_(std::move(dst)), f_(std::move(f)), g_(std::move(g)),
        alpha_(std::move(alpha)) {
    if (!(f_.domain() == src_.wit()) || !(f_.codomain() == dst_.wit())) {
      throw InvariantViolation("forward map does not go between witness sets");
    }
    if (g_.domain().size() != src_.wit().size() * dst_.cowit().size()) {
      throw InvariantViolation("backward map is not defined on X x V");
    }
    if (alpha_.size() != g_.domain().size()) throw InvariantViolation("alpha table is not total");
  }

  const Object& src() const { return src_; }
  const Object& dst() const { return dst_; }
  const FiniteFunction& f() const { return f_; }
  const FiniteFunction& g() const { return g_; }
  const std::vector<BaseMorphism>& alpha_table() const { return alpha_; }

  // The multiset g(x, v).
  Value g_at(const Value& x, const Value& v) const { return g_(Value::pair(x, v)); }

  friend bool operator==(const DiMorphism& a, const DiMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.f_ == b.f_ && a.g_ == b.g_ &&
           a.alpha_ == b.alpha_;
  }

 private:
  Object src_;
  Object dst_;
  FiniteFunction f_;
  FiniteFunction g_;
  std::vector<BaseMorphism> alpha_;
};

// The Diller-Nahm construction over a cartesian posetal base.  Backward maps
// return finite multisets, enumerated up to limits.multiset_bound.
template <CartesianPosetalBase S>
class DillerNahm {
 public:
  using Base = S;
  using BaseObject = typename S::Object;
  using BaseMorphism = typename S::Morphism;
  using Object = Family2<BaseObject>;
  using Morphism = DiMorphism<S>;

  explicit DillerNahm(S base, Limits limits = {}) : base_(std::move(base)), limits_(limits) {}

  const S& base() const { return base_; }
  const Limits& limits() const { return limits_; }

  Object tabulated(EffectiveSet wit, EffectiveSet cowit, std::vector<BaseObject> entries) const {
    if (entries.size() != wit.size() * cowit.size()) {
      throw InvariantViolation("object table has the wrong size");
    }
    auto table = std::make_shared<const std::vector<BaseObject>>(std::move(entries));
    const std::size_t cols = cowit.size();
    return Object(wit, cowit, [wit, cowit, table, cols](const Value& x, const Value& y) {
      auto xi = wit.index_of(x);
      auto yi = cowit.index_of(y);
      if (!xi || !yi) throw TruncationMiss("tabulated object has no entry at " + x.to_string());
      return (*table)[*xi * cols + *yi];
    });
  }

  EffectiveSet cowit_star(const Object& G) const {
    return multiset_space(G.cowit(), limits_.multiset_bound, limits_);
  }

  Morphism identity(const Object& G) const {
    auto g = FiniteFunction::tabulate(product(G.wit(), G.cowit()), cowit_star(G),
                                      [](const Value& p) { return multiset_singleton(p[1]); });
    return from_maps(G, G, FiniteFunction::identity(G.wit()), std::move(g));
  }

  // second after first: backward map (x, q) -> g'(f x, q) >>= (v -> g(x, v)).
  Morphism compose(const Morphism& second, const Morphism& first) const {
    if (!(first.dst() == second.src())) throw ContractViolation("composing non-matching morphisms");
    auto f = first.f().then(second.f());
    auto g = FiniteFunction::tabulate(
        product(first.src().wit(), second.dst().cowit()), cowit_star(first.src()),
        [first, second](const Value& p) {
          const Value& x = p[0];
          return multiset_bind(second.g_at(first.f()(x), p[1]),
                               [&](const Value& v) { return first.g_at(x, v); });
        });
    return from_maps(first.src(), second.dst(), std::move(f), std::move(g));
  }

  // Derives alpha from f and g; throws ContractViolation where no arrow exists.
  Morphism from_maps(const Object& src, const Object& dst, FiniteFunction f, FiniteFunction g) const {
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& x : src.wit()) {
      const Value fx = f(x);
      for (const auto& v : dst.cowit()) {
        auto a = base_.arrow(product_over(base_, src, x, g(Value::pair(x, v))), dst(fx, v));
        if (!a) {
          throw ContractViolation("no base morphism at (" + x.to_string() + ", " + v.to_string() + ")");
        }
        alpha.push_back(*a);
      }
    }
    return Morphism(src, dst, std::move(f), std::move(g), std::move(alpha));
  }

  // Enumerates morphisms whose multisets have size at most the bound, in
  // lexicographic order of f, then g.
  template <class Visit>
  bool for_each_hom(const Object& G, const Object& H, Visit&& visit) const {
    const auto& X = G.wit();
    const auto& U = H.wit();
    const auto& V = H.cowit();
    check_budget("forward maps of hom-set", saturating_pow(U.size(), X.size()), limits_);
    if (X.size() > 0 && U.size() == 0) return true;
    const auto ystar = cowit_star(G);
    const auto xv = product(X, V);
    std::vector<std::size_t> fdigit(X.size(), 0);
    std::uint64_t produced = 0;
    while (true) {
      // Admissible multisets for each (x, v), x-major.
      std::vector<std::vector<Value>> cands;
      bool viable = true;
      for (std::size_t xi = 0; xi < X.size() && viable; ++xi) {
        for (std::size_t vi = 0; vi < V.size() && viable; ++vi) {
          std::vector<Value> ok;
          for (const auto& s : ystar) {
            if (base_.leq(product_over(base_, G, X[xi], s), H.at(fdigit[xi], vi))) ok.push_back(s);
          }
          viable = !ok.empty();
          cands.push_back(std::move(ok));
        }
      }
      if (viable) {
        std::vector<Value> ftable;
        for (auto d : fdigit) ftable.push_back(U[d]);
        FiniteFunction f(X, U, std::move(ftable));
        std::vector<std::size_t> gdigit(cands.size(), 0);
        while (true) {
          std::vector<Value> gtable;
          for (std::size_t i = 0; i < cands.size(); ++i) gtable.push_back(cands[i][gdigit[i]]);
          if (++produced > limits_.budget) {
            throw BudgetExceeded("hom-set enumeration", produced, limits_.budget);
          }
          if (!visit(from_maps(G, H, f, FiniteFunction(xv, ystar, std::move(gtable))))) return false;
          std::size_t k = cands.size();
          bool carried = true;
          while (k > 0) {
            --k;
            if (++gdigit[k] < cands[k].size()) {
              carried = false;
              break;
            }
            gdigit[k] = 0;
          }
          if (carried) break;
        }
      }
      std::size_t k = X.size();
      bool carried = true;
      while (k > 0) {
        --k;
        if (++fdigit[k] < U.size()) {
          carried = false;
          break;
        }
        fdigit[k] = 0;
      }
      if (carried) break;
    }
    return true;
  }

  std::vector<Morphism> hom(const Object& G, const Object& H) const {
    std::vector<Morphism> out;
    for_each_hom(G, H, [&](Morphism m) {
      out.push_back(std::move(m));
      return true;
    });
    return out;
  }

  // ---- finite products ----

  // Witnesses X x U, counter-witnesses Y + V.
  Object with_(const Object& G, const Object& H) const {
    return Object(product(G.wit(), H.wit()), coproduct(G.cowit(), H.cowit()),
                  [G, H](const Value& w, const Value& c) {
                    if (c.is(Value::Kind::Inl)) return G(w[0], c.payload());
                    return H(w[1], c.payload());
                  });
  }

  Object top() const {
    return Object(EffectiveSet::singleton(), EffectiveSet(),
                  [](const Value& x, const Value&) -> BaseObject {
                    throw ContractViolation("empty family evaluated at " + x.to_string());
                  });
  }

  Morphism project_left(const Object& G, const Object& H) const { return project(G, H, true); }
  Morphism project_right(const Object& G, const Object& H) const { return project(G, H, false); }

  // The pairing <m, n> : K -> G & H.
  Morphism pairing(const Morphism& m, const Morphism& n) const {
    if (!(m.src() == n.src())) throw ContractViolation("pairing morphisms with different sources");
    const auto& K = m.src();
    auto P = with_(m.dst(), n.dst());
    auto f = FiniteFunction::tabulate(K.wit(), P.wit(), [m, n](const Value& k) {
      return Value::pair(m.f()(k), n.f()(k));
    });
    auto g = FiniteFunction::tabulate(product(K.wit(), P.cowit()), cowit_star(K),
                                      [m, n](const Value& p) {
                                        const Value& c = p[1];
                                        if (c.is(Value::Kind::Inl)) return m.g_at(p[0], c.payload());
                                        return n.g_at(p[0], c.payload());
                                      });
    return from_maps(K, P, std::move(f), std::move(g));
  }

  // The unique morphism G -> top.
  Morphism bang_to_top(const Object& G) const {
    auto T = top();
    auto f = FiniteFunction::tabulate(G.wit(), T.wit(), [](const Value&) { return Value::unit(); });
    return from_maps(G, T, std::move(f), FiniteFunction(product(G.wit(), T.cowit()), cowit_star(G), {}));
  }

 private:
  Morphism project(const Object& G, const Object& H, bool left) const {
    auto P = with_(G, H);
    const auto& target = left ? G : H;
    auto f = FiniteFunction::tabulate(P.wit(), target.wit(),
                                      [left](const Value& w) { return left ? w[0] : w[1]; });
    auto g = FiniteFunction::tabulate(product(P.wit(), target.cowit()), cowit_star(P),
                                      [left](const Value& p) {
                                        return multiset_singleton(left ? Value::inl(p[1])
                                                                       : Value::inr(p[1]));
                                      });
    return from_maps(P, target, std::move(f), std::move(g));
  }

  S base_;
  Limits limits_;
};

}  // namespace dialectica
