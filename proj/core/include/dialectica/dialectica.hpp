#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/dial_object.hpp"
#include "dialectica/errors.hpp"
#include "dialectica/finset.hpp"

namespace dialectica {

// The linear dialectica construction over a base model B.  Dialectica<B> is
// itself a base model, so it can be iterated.
template <class B>
class Dialectica {
 public:
  using Base = B;
  using BaseObject = typename B::Object;
  using BaseMorphism = typename B::Morphism;
  using Object = DialObject<B>;
  using Morphism = DialMorphism<B>;
  using Fam = typename Object::Fam;

  explicit Dialectica(B base, Limits limits = {}) : base_(std::move(base)), limits_(limits) {}

  const B& base() const { return base_; }
  const Limits& limits() const { return limits_; }

  Object make_object(EffectiveSet wit, EffectiveSet cowit, Fam fam) const {
    return Object(std::move(wit), std::move(cowit), std::move(fam));
  }

  // Object with enumerated index sets from a row-major table.
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

  // The game with one play and the given outcome.
  Object eta(const BaseObject& a) const {
    return make_object(EffectiveSet::singleton(), EffectiveSet::singleton(),
                       [a](const Value&, const Value&) { return a; });
  }

  Morphism eta(const BaseMorphism& p) const {
    auto src = eta(base_.source(p));
    auto dst = eta(base_.target(p));
    return Morphism(src, dst, FiniteFunction::identity(src.wit()),
                    FiniteFunction::identity(dst.cowit()), {p});
  }

  // ---- category structure ----

  Object source(const Morphism& m) const { return m.src(); }
  Object target(const Morphism& m) const { return m.dst(); }

  Morphism identity(const Object& g) const {
    std::vector<BaseMorphism> alpha;
    alpha.reserve(g.wit().size() * g.cowit().size());
    for (const auto& e : g.table()) alpha.push_back(base_.identity(e));
    typename Morphism::AlphaRule rule;
    if (g.wit().is_truncated() || g.cowit().is_truncated()) {
      rule = [base = base_, g](const Value& x, const Value& y) { return base.identity(g(x, y)); };
    }
    return Morphism(g, g, FiniteFunction::identity(g.wit()), FiniteFunction::identity(g.cowit()),
                    std::move(alpha), std::move(rule));
  }

  // second after first.
  Morphism compose(const Morphism& second, const Morphism& first) const {
    if (!(first.dst() == second.src())) throw ContractViolation("composing non-matching morphisms");
    const auto& src = first.src();
    const auto& dst = second.dst();
    auto f = first.f().then(second.f());
    auto g = second.g().then(first.g());
    auto component = [base = base_, first, second](const Value& x, const Value& q) {
      const Value fx = first.f()(x);
      const Value gq = second.g()(q);
      return base.compose(second.alpha_at(fx, q), first.alpha_at(x, gq));
    };
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& x : src.wit()) {
      for (const auto& q : dst.cowit()) alpha.push_back(component(x, q));
    }
    typename Morphism::AlphaRule rule;
    if (src.wit().is_truncated() || dst.cowit().is_truncated()) rule = component;
    return Morphism(src, dst, std::move(f), std::move(g), std::move(alpha), std::move(rule));
  }

  // Every alpha component lies in hom(G(x, g v), H(f x, v)).
  bool well_typed(const Morphism& m) const {
    const auto& g = m.src();
    const auto& h = m.dst();
    for (std::size_t xi = 0; xi < g.wit().size(); ++xi) {
      const Value fx = m.f().at(xi);
      for (std::size_t vi = 0; vi < h.cowit().size(); ++vi) {
        const Value gv = m.g().at(vi);
        const auto& a = m.alpha(xi, vi);
        if (!(base_.source(a) == g(g.wit()[xi], gv))) return false;
        if (!(base_.target(a) == h(fx, h.cowit()[vi]))) return false;
      }
    }
    return true;
  }

  Morphism checked(Morphism m) const {
    if (!well_typed(m)) throw ContractViolation("alpha component outside its hom-set");
    return m;
  }

  // Builds a morphism from f and g, taking alpha from the base where it is posetal.
  Morphism from_maps(const Object& src, const Object& dst, FiniteFunction f,
                     FiniteFunction g) const
    requires PosetalBase<B>
  {
    auto component = [base = base_, src, dst, f, g](const Value& x, const Value& v) {
      auto a = base.arrow(src(x, g(v)), dst(f(x), v));
      if (!a) throw ContractViolation("no base morphism at (" + x.to_string() + ", " + v.to_string() + ")");
      return *a;
    };
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& x : src.wit()) {
      for (const auto& v : dst.cowit()) alpha.push_back(component(x, v));
    }
    typename Morphism::AlphaRule rule;
    if (src.wit().is_truncated() || dst.cowit().is_truncated()) rule = component;
    return Morphism(src, dst, std::move(f), std::move(g), std::move(alpha), std::move(rule));
  }

  // Enumerates hom(G, H) in lexicographic order of f, then g, then alpha.
  std::vector<Morphism> hom(const Object& G, const Object& H) const {
    std::vector<Morphism> out;
    for_each_hom(G, H, [&](Morphism m) {
      out.push_back(std::move(m));
      return true;
    });
    return out;
  }

  // Calls visit on each morphism until it returns false.  Returns whether
  // the enumeration ran to completion.
  template <class Visit>
  bool for_each_hom(const Object& G, const Object& H, Visit&& visit) const {
    const auto& X = G.wit();
    const auto& Y = G.cowit();
    const auto& U = H.wit();
    const auto& V = H.cowit();
    check_budget("forward maps of hom-set", saturating_pow(U.size(), X.size()), limits_);
    if (X.size() > 0 && U.size() == 0) return true;
    if (V.size() > 0 && Y.size() == 0) return true;

    std::vector<std::size_t> fdigit(X.size(), 0);
    std::uint64_t produced = 0;
    while (true) {
      // For each v, the candidate y with every per-x hom-set.
      struct Cand {
        std::size_t y;
        std::vector<std::vector<BaseMorphism>> homs;  // per x
      };
      std::vector<std::vector<Cand>> cands(V.size());
      bool viable = true;
      for (std::size_t vi = 0; vi < V.size() && viable; ++vi) {
        for (std::size_t yi = 0; yi < Y.size(); ++yi) {
          Cand c{yi, {}};
          bool ok = true;
          for (std::size_t xi = 0; xi < X.size(); ++xi) {
            auto hs = base_.hom(G.at(xi, yi), H.at(fdigit[xi], vi));
            if (hs.empty()) {
              ok = false;
              break;
            }
            c.homs.push_back(std::move(hs));
          }
          if (ok) cands[vi].push_back(std::move(c));
        }
        viable = !cands[vi].empty();
      }
      if (viable) {
        std::vector<Value> ftable;
        for (auto d : fdigit) ftable.push_back(U[d]);
        FiniteFunction f(X, U, std::move(ftable));
        std::vector<std::size_t> gdigit(V.size(), 0);
        while (true) {
          std::vector<Value> gtable;
          for (std::size_t vi = 0; vi < V.size(); ++vi) gtable.push_back(Y[cands[vi][gdigit[vi]].y]);
          FiniteFunction g(V, Y, std::move(gtable));
          // Odometer over alpha choices, x-major.
          std::vector<std::size_t> adigit(X.size() * V.size(), 0);
          while (true) {
            std::vector<BaseMorphism> alpha;
            alpha.reserve(adigit.size());
            for (std::size_t xi = 0; xi < X.size(); ++xi) {
              for (std::size_t vi = 0; vi < V.size(); ++vi) {
                alpha.push_back(cands[vi][gdigit[vi]].homs[xi][adigit[xi * V.size() + vi]]);
              }
            }
            if (++produced > limits_.budget) {
              throw BudgetExceeded("hom-set enumeration", produced, limits_.budget);
            }
            if (!visit(Morphism(G, H, f, g, std::move(alpha), alpha_rule_for(G, H, f, g))))
              return false;
            std::size_t k = adigit.size();
            bool carried = true;
            while (k > 0) {
              --k;
              const std::size_t xi = k / V.size();
              const std::size_t vi = k % V.size();
              if (++adigit[k] < cands[vi][gdigit[vi]].homs[xi].size()) {
                carried = false;
                break;
              }
              adigit[k] = 0;
            }
            if (carried) break;
          }
          std::size_t k = V.size();
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

  // ---- constants and connectives ----

  Object one() const {
    return make_object(EffectiveSet::singleton(), EffectiveSet::singleton(),
                       [u = base_.unit()](const Value&, const Value&) { return u; });
  }
  Object unit() const { return one(); }

  Object bot() const {
    return make_object(EffectiveSet::singleton(), EffectiveSet::singleton(),
                       [b = base_.dual(base_.unit())](const Value&, const Value&) { return b; });
  }
  Object bottom() const { return bot(); }

  Object top() const {
    return make_object(EffectiveSet::singleton(), EffectiveSet(), unreachable_family());
  }

  Object zero() const {
    return make_object(EffectiveSet(), EffectiveSet::singleton(), unreachable_family());
  }

  Object dual(const Object& G) const {
    return make_object(G.cowit(), G.wit(), [base = base_, G](const Value& y, const Value& x) {
      return base.dual(G(x, y));
    });
  }

  // (f, g, alpha)^ : H^ -> G^ is (g, f, alpha^).
  Morphism dual(const Morphism& m) const {
    auto src = dual(m.dst());
    auto dst = dual(m.src());
    auto component = [base = base_, m](const Value& v, const Value& x) {
      return base.dual(m.alpha_at(x, v));
    };
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& v : src.wit()) {
      for (const auto& x : dst.cowit()) alpha.push_back(component(v, x));
    }
    typename Morphism::AlphaRule rule;
    if (src.wit().is_truncated() || dst.cowit().is_truncated()) rule = component;
    return Morphism(src, dst, retag(m.g(), src.wit(), dst.wit()), retag(m.f(), dst.cowit(), src.cowit()),
                    std::move(alpha), std::move(rule));
  }

  // Witnesses X x U, counter-witnesses (U -> Y) x (X -> V).
  Object tensor(const Object& G, const Object& H) const {
    auto wit = product(G.wit(), H.wit());
    auto cowit = product(function_space(H.wit(), G.cowit(), limits_),
                         function_space(G.wit(), H.cowit(), limits_));
    return make_object(wit, cowit, [base = base_, G, H](const Value& w, const Value& c) {
      const Value& x = w[0];
      const Value& u = w[1];
      return base.tensor(G(x, c[0].apply(u)), H(u, c[1].apply(x)));
    });
  }

  Morphism tensor(const Morphism& m, const Morphism& n) const {
    auto src = tensor(m.src(), n.src());
    auto dst = tensor(m.dst(), n.dst());
    auto f = FiniteFunction::tabulate(src.wit(), dst.wit(), [m, n](const Value& w) {
      return Value::pair(m.f()(w[0]), n.f()(w[1]));
    });
    const auto& G = m.src();
    const auto& H = n.src();
    auto g = FiniteFunction::tabulate(dst.cowit(), src.cowit(), [m, n, G, H](const Value& c) {
      const Value& h = c[0];
      const Value& k = c[1];
      std::vector<std::pair<Value, Value>> left, right;
      for (const auto& u : H.wit()) left.emplace_back(u, m.g()(h.apply(n.f()(u))));
      for (const auto& x : G.wit()) right.emplace_back(x, n.g()(k.apply(m.f()(x))));
      return Value::pair(Value::function(std::move(left)), Value::function(std::move(right)));
    });
    auto component = [base = base_, m, n](const Value& w, const Value& c) {
      const Value& x = w[0];
      const Value& u = w[1];
      const Value& h = c[0];
      const Value& k = c[1];
      return base.tensor(m.alpha_at(x, h.apply(n.f()(u))), n.alpha_at(u, k.apply(m.f()(x))));
    };
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& w : src.wit()) {
      for (const auto& c : dst.cowit()) alpha.push_back(component(w, c));
    }
    typename Morphism::AlphaRule rule;
    if (src.wit().is_truncated() || dst.cowit().is_truncated()) rule = component;
    return Morphism(src, dst, std::move(f), std::move(g), std::move(alpha), std::move(rule));
  }

  // Witnesses (V -> X) x (Y -> U), counter-witnesses Y x V.
  Object par(const Object& G, const Object& H) const {
    auto wit = product(function_space(H.cowit(), G.wit(), limits_),
                       function_space(G.cowit(), H.wit(), limits_));
    auto cowit = product(G.cowit(), H.cowit());
    return make_object(wit, cowit, [base = base_, G, H](const Value& w, const Value& c) {
      const Value& y = c[0];
      const Value& v = c[1];
      return base.par(G(w[0].apply(v), y), H(w[1].apply(y), v));
    });
  }

  // Witnesses X x U, counter-witnesses Y + V.
  Object with_(const Object& G, const Object& H) const {
    auto wit = product(G.wit(), H.wit());
    auto cowit = coproduct(G.cowit(), H.cowit());
    return make_object(wit, cowit, [G, H](const Value& w, const Value& c) {
      if (c.is(Value::Kind::Inl)) return G(w[0], c.payload());
      return H(w[1], c.payload());
    });
  }

  // Witnesses X + U, counter-witnesses Y x V.
  Object plus(const Object& G, const Object& H) const {
    auto wit = coproduct(G.wit(), H.wit());
    auto cowit = product(G.cowit(), H.cowit());
    return make_object(wit, cowit, [G, H](const Value& w, const Value& c) {
      if (w.is(Value::Kind::Inl)) return G(w.payload(), c[0]);
      return H(w.payload(), c[1]);
    });
  }

  Object lollipop(const Object& G, const Object& H) const { return dual(tensor(G, dual(H))); }

  // Witnesses X, counter-witnesses X -> Y*, value the tensor of !G(x, y) over y in h(x).
  Object bang(const Object& G) const
    requires ExponentialBase<B>
  {
    auto cowit = function_space(G.wit(), multiset_space(G.cowit(), limits_.multiset_bound, limits_),
                                limits_);
    return make_object(G.wit(), cowit, [base = base_, G](const Value& x, const Value& h) {
      std::vector<BaseObject> parts;
      for (const auto& y : h.apply(x).items()) parts.push_back(base.bang(G(x, y)));
      return tensor_fold(base, parts);
    });
  }

  // !(f, g, alpha) maps h to x -> image of h(f x) under g.
  Morphism bang(const Morphism& m) const
    requires ExponentialBase<B>
  {
    auto src = bang(m.src());
    auto dst = bang(m.dst());
    const auto X = m.src().wit();
    auto g = FiniteFunction::tabulate(dst.cowit(), src.cowit(), [m, X](const Value& h) {
      std::vector<std::pair<Value, Value>> entries;
      for (const auto& x : X) {
        std::vector<Value> ys;
        for (const auto& v : h.apply(m.f()(x)).items()) ys.push_back(m.g()(v));
        entries.emplace_back(x, Value::multiset(std::move(ys)));
      }
      return Value::function(std::move(entries));
    });
    auto component = [base = base_, m](const Value& x, const Value& h) {
      std::vector<BaseMorphism> parts;
      for (const auto& v : h.apply(m.f()(x)).items()) parts.push_back(base.bang(m.alpha_at(x, v)));
      return tensor_fold_morphism(base, parts);
    };
    std::vector<BaseMorphism> alpha;
    alpha.reserve(src.wit().size() * dst.cowit().size());
    for (const auto& x : src.wit()) {
      for (const auto& h : dst.cowit()) alpha.push_back(component(x, h));
    }
    return Morphism(src, dst, retag(m.f(), src.wit(), dst.wit()), std::move(g), std::move(alpha),
                    component);
  }

  // Witnesses Y -> X*, counter-witnesses Y, value the par of ?G(x, y) over x in h(y).
  Object whynot(const Object& G) const
    requires ExponentialBase<B>
  {
    auto wit = function_space(G.cowit(), multiset_space(G.wit(), limits_.multiset_bound, limits_),
                              limits_);
    return make_object(wit, G.cowit(), [base = base_, G](const Value& h, const Value& y) {
      std::vector<BaseObject> parts;
      for (const auto& x : h.apply(y).items()) parts.push_back(base.whynot(G(x, y)));
      if (parts.empty()) return base.dual(base.unit());
      BaseObject acc = parts.front();
      for (std::size_t i = 1; i < parts.size(); ++i) acc = base.par(acc, parts[i]);
      return acc;
    });
  }

  std::string describe(const Object& G) const {
    return "(" + std::to_string(G.wit().size()) + (G.wit().is_truncated() ? "+" : "") + " x " +
           std::to_string(G.cowit().size()) + (G.cowit().is_truncated() ? "+" : "") + ")";
  }

 private:
  static Fam unreachable_family() {
    return [](const Value& x, const Value&) -> BaseObject {
      throw ContractViolation("empty family evaluated at " + x.to_string());
    };
  }

  // The same function viewed between structurally equal sets.
  static FiniteFunction retag(const FiniteFunction& fn, const EffectiveSet& dom,
                              const EffectiveSet& cod) {
    if (fn.domain() == dom && fn.codomain() == cod && !fn.has_rule()) {
      return FiniteFunction(dom, cod, fn.table());
    }
    return FiniteFunction(dom, cod, fn.table(), [fn](const Value& x) { return fn(x); });
  }

  typename Morphism::AlphaRule alpha_rule_for(const Object& G, const Object& H,
                                              const FiniteFunction& f,
                                              const FiniteFunction& g) const {
    if constexpr (PosetalBase<B>) {
      if (G.wit().is_truncated() || H.cowit().is_truncated()) {
        return [base = base_, G, H, f, g](const Value& x, const Value& v) {
          auto a = base.arrow(G(x, g(v)), H(f(x), v));
          if (!a) throw TruncationMiss("no base morphism outside the enumerated hom-set");
          return *a;
        };
      }
    }
    return {};
  }

  B base_;
  Limits limits_;
};

}  // namespace dialectica
