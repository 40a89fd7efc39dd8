#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dialectica/dialectica.hpp"
#include "dialectica/posetal_search.hpp"

namespace dialectica {

// An object of the iterated construction: a family of families.
template <class E>
using TwoLevel = Family2<Family2<E>>;

// Applies fn to every entry of a family, keeping the index sets.
template <class E, class Fn>
auto map_entries(const Family2<E>& G, Fn fn) {
  using Out = decltype(fn(std::declval<const E&>()));
  return Family2<Out>(G.wit(), G.cowit(), [G, fn](const Value& x, const Value& y) { return fn(G(x, y)); });
}

// mu flattens two bidding rounds into one.  Witnesses (x, f) with f choosing
// an inner witness for every y, counter-witnesses (y, g) likewise, and value
// G(x, y)(f y, g x).
template <class E>
Family2<E> mu_object(const TwoLevel<E>& G, const Limits& limits = {}) {
  auto wit = dependent_sum(G.wit(), [G, limits](const Value& x) {
    return dependent_product(G.cowit(), [G, x](const Value& y) { return G(x, y).wit(); }, limits);
  });
  auto cowit = dependent_sum(G.cowit(), [G, limits](const Value& y) {
    return dependent_product(G.wit(), [G, y](const Value& x) { return G(x, y).cowit(); }, limits);
  });
  return Family2<E>(wit, cowit, [G](const Value& w, const Value& z) {
    const Value& x = w[0];
    const Value& y = z[0];
    return G(x, y)(w[1].apply(y), z[1].apply(x));
  });
}

// mu on a morphism (f, g, alpha) of the iterated construction: witnesses
// (x, phi) go to (f x, y' -> alpha(x, y').f(phi(g y'))), counter-witnesses
// (y', psi) to (g y', x -> alpha(x, y').g(psi(f x))), and the component at
// ((x, phi), (y', psi)) is the inner alpha at (phi(g y'), psi(f x)).
template <class B>
DialMorphism<B> mu_morphism(const DialMorphism<Dialectica<B>>& m, const Limits& limits = {}) {
  auto src = mu_object<typename B::Object>(m.src(), limits);
  auto dst = mu_object<typename B::Object>(m.dst(), limits);
  const auto& Ydst = m.dst().cowit();
  const auto& Xsrc = m.src().wit();
  auto f = FiniteFunction::tabulate(src.wit(), dst.wit(), [m, Ydst](const Value& w) {
    const Value& x = w[0];
    const Value fx = m.f()(x);
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& y2 : Ydst) {
      entries.emplace_back(y2, m.alpha_at(x, y2).f()(w[1].apply(m.g()(y2))));
    }
    return Value::pair(fx, Value::function(std::move(entries)));
  });
  auto g = FiniteFunction::tabulate(dst.cowit(), src.cowit(), [m, Xsrc](const Value& z) {
    const Value& y2 = z[0];
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& x : Xsrc) {
      entries.emplace_back(x, m.alpha_at(x, y2).g()(z[1].apply(m.f()(x))));
    }
    return Value::pair(m.g()(y2), Value::function(std::move(entries)));
  });
  auto component = [m](const Value& w, const Value& z) {
    const Value& x = w[0];
    const Value& y2 = z[0];
    const auto inner = m.alpha_at(x, y2);
    return inner.alpha_at(w[1].apply(m.g()(y2)), z[1].apply(m.f()(x)));
  };
  std::vector<typename B::Morphism> alpha;
  alpha.reserve(src.wit().size() * dst.cowit().size());
  for (const auto& w : src.wit()) {
    for (const auto& z : dst.cowit()) alpha.push_back(component(w, z));
  }
  typename DialMorphism<B>::AlphaRule rule;
  if (src.wit().is_truncated() || dst.cowit().is_truncated()) rule = component;
  return DialMorphism<B>(src, dst, std::move(f), std::move(g), std::move(alpha), std::move(rule));
}

// ---- first monad law ----

template <class B>
struct FirstLawWitness {
  DialObject<B> via_outer_eta;  // mu(eta_D(G))
  DialObject<B> via_inner_eta;  // mu(D_f(eta_R)(G))
  DialMorphism<B> to_outer, from_outer;
  DialMorphism<B> to_inner, from_inner;
  bool round_trips = false;
};

// Both composites with eta, each with an explicit inverse pair to G.
template <PosetalBase B>
FirstLawWitness<B> first_monad_law_check(const Dialectica<B>& model, const DialObject<B>& G) {
  Dialectica<Dialectica<B>> twice(model, model.limits());
  const auto& lim = model.limits();
  auto outer = mu_object<typename B::Object>(twice.eta(G), lim);
  auto inner = mu_object<typename B::Object>(
      map_entries(G, [&model](const typename B::Object& a) { return model.eta(a); }), lim);
  const Value star = Value::unit();
  auto wrap = [star](const Value& a) {
    return Value::pair(star, Value::function({{star, a}}));
  };
  auto unwrap = [star](const Value& w) { return w[1].apply(star); };
  auto iso = [&](const DialObject<B>& A, const DialObject<B>& C, auto fwd, auto bwd) {
    return model.from_maps(A, C, FiniteFunction::tabulate(A.wit(), C.wit(), fwd),
                           FiniteFunction::tabulate(C.cowit(), A.cowit(), bwd));
  };
  auto to_outer = iso(G, outer, wrap, unwrap);
  auto from_outer = iso(outer, G, unwrap, wrap);
  const auto X = G.wit();
  const auto Y = G.cowit();
  // x -> (x, y -> *) and (y, x -> *) -> y.
  auto tag = [star](const EffectiveSet& other) {
    return [star, other](const Value& a) {
      std::vector<std::pair<Value, Value>> entries;
      for (const auto& b : other) entries.emplace_back(b, star);
      return Value::pair(a, Value::function(std::move(entries)));
    };
  };
  auto untag = [](const Value& w) { return w[0]; };
  auto to_inner = iso(G, inner, tag(Y), untag);
  auto from_inner = iso(inner, G, untag, tag(X));
  const auto id_g = model.identity(G);
  bool ok = model.compose(from_outer, to_outer) == id_g &&
            model.compose(to_outer, from_outer) == model.identity(outer) &&
            model.compose(from_inner, to_inner) == id_g &&
            model.compose(to_inner, from_inner) == model.identity(inner);
  return FirstLawWitness<B>{outer, inner, to_outer, from_outer, to_inner, from_inner, ok};
}

// ---- lax monoidality of mu ----

// The morphism mu G (x) mu H -> mu(G (x) H).  Its forward map is Phi,
// ((x, a), (w, b)) -> ((x, w), (f, g) -> (a(f w), b(g x))), and its backward
// map is Psi, sending ((f, g), F) to the pair of
// (w, h) -> (f w, x -> left(F(x, w))(h(g x))) and
// (x, h) -> (g x, w -> right(F(x, w))(h(f w))).
template <PosetalBase B>
DialMorphism<B> lax_monoidal_map(const Dialectica<B>& model, const TwoLevel<typename B::Object>& G,
                                 const TwoLevel<typename B::Object>& H) {
  Dialectica<Dialectica<B>> twice(model, model.limits());
  const auto& lim = model.limits();
  auto muG = mu_object<typename B::Object>(G, lim);
  auto muH = mu_object<typename B::Object>(H, lim);
  auto src = model.tensor(muG, muH);
  auto dst = mu_object<typename B::Object>(twice.tensor(G, H), lim);
  const auto fg_set = twice.tensor(G, H).cowit();
  auto phi = FiniteFunction::tabulate(src.wit(), dst.wit(), [fg_set](const Value& ww) {
    const Value& a = ww[0];
    const Value& b = ww[1];
    const Value& x = a[0];
    const Value& w = b[0];
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& fg : fg_set) {
      entries.emplace_back(fg, Value::pair(a[1].apply(fg[0].apply(w)), b[1].apply(fg[1].apply(x))));
    }
    return Value::pair(Value::pair(x, w), Value::function(std::move(entries)));
  });
  const auto X = G.wit();
  const auto W = H.wit();
  auto psi = FiniteFunction::tabulate(dst.cowit(), src.cowit(), [X, W, muG, muH](const Value& z) {
    const Value& f = z[0][0];
    const Value& g = z[0][1];
    const Value& F = z[1];
    std::vector<std::pair<Value, Value>> left, right;
    for (const auto& wh : muH.wit()) {
      const Value& w = wh[0];
      std::vector<std::pair<Value, Value>> hx;
      for (const auto& x : X) {
        hx.emplace_back(x, F.apply(Value::pair(x, w))[0].apply(wh[1].apply(g.apply(x))));
      }
      left.emplace_back(wh, Value::pair(f.apply(w), Value::function(std::move(hx))));
    }
    for (const auto& xa : muG.wit()) {
      const Value& x = xa[0];
      std::vector<std::pair<Value, Value>> hw;
      for (const auto& w : W) {
        hw.emplace_back(w, F.apply(Value::pair(x, w))[1].apply(xa[1].apply(f.apply(w))));
      }
      right.emplace_back(xa, Value::pair(g.apply(x), Value::function(std::move(hw))));
    }
    return Value::pair(Value::function(std::move(left)), Value::function(std::move(right)));
  });
  return model.from_maps(src, dst, std::move(phi), std::move(psi));
}

struct InverseSearch {
  bool found = false;
  std::uint64_t forward_candidates = 0;   // reverse forward maps satisfying both round trips
  std::uint64_t backward_candidates = 0;  // reverse backward maps satisfying both round trips
  std::uint64_t nodes = 0;                // partial assignments visited
};

namespace detail {

// Counts tables r : cod -> dom with r(m(a)) = a and m(r(b)) = b by
// backtracking over b; partial tables are pruned only by those equations.
inline std::uint64_t count_two_sided_inverses(const FiniteFunction& m, std::uint64_t& nodes) {
  const auto& dom = m.domain();
  const auto& cod = m.codomain();
  std::vector<std::size_t> image(dom.size());
  for (std::size_t a = 0; a < dom.size(); ++a) image[a] = *cod.index_of(m.at(a));
  std::vector<std::size_t> r(cod.size(), SIZE_MAX);
  std::uint64_t count = 0;
  auto consistent = [&](std::size_t b, std::size_t a) {
    if (image[a] != b) return false;  // m(r(b)) = b
    for (std::size_t a2 = 0; a2 < dom.size(); ++a2) {
      // r(m(a2)) = a2 for every a2 whose image is b.
      if (image[a2] == b && a2 != a) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t b) -> void {
    ++nodes;
    if (b == cod.size()) {
      for (std::size_t a = 0; a < dom.size(); ++a) {
        if (r[image[a]] != a) return;
      }
      ++count;
      return;
    }
    for (std::size_t a = 0; a < dom.size(); ++a) {
      if (!consistent(b, a)) continue;
      r[b] = a;
      self(self, b + 1);
      r[b] = SIZE_MAX;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace detail

// Searches every candidate reverse morphism r of m with r . m = id and
// m . r = id.  Over a posetal base alpha is determined by (f, g), so the
// search ranges over forward and backward tables and then checks alpha.
template <PosetalBase B>
InverseSearch search_inverse(const Dialectica<B>& model, const DialMorphism<B>& m) {
  InverseSearch out;
  out.forward_candidates = detail::count_two_sided_inverses(m.f(), out.nodes);
  // Backward maps go the other way: r.g : Y -> V must invert m.g : V -> Y.
  out.backward_candidates = detail::count_two_sided_inverses(m.g(), out.nodes);
  if (out.forward_candidates > 0 && out.backward_candidates > 0) {
    out.found = find_inverse(model, m).has_value();
  }
  return out;
}

// ---- second monad law ----

template <class B>
struct SecondLawReport {
  DialObject<B> via_inner_mu;  // mu(D_f(mu)(G))
  DialObject<B> via_outer_mu;  // mu(mu_D(G))
  bool hom_forward = false;    // hom(via_inner_mu, via_outer_mu) nonempty
  bool hom_backward = false;
  bool witness_transformation_typed = false;
  bool cowitness_transformation_typed = false;
};

// Both composites on a three-level object, decided by the hom solver.
template <PosetalBase B>
SecondLawReport<B> second_monad_law_check(const Dialectica<B>& model,
                                          const TwoLevel<Family2<typename B::Object>>& G) {
  using E = typename B::Object;
  const auto& lim = model.limits();
  auto inner = map_entries(G, [lim](const TwoLevel<E>& e) { return mu_object<E>(e, lim); });
  auto A = mu_object<E>(inner, lim);
  auto C = mu_object<E>(mu_object<Family2<E>>(G, lim), lim);
  SecondLawReport<B> report{A, C};
  report.hom_forward = hom_exists(model, A, C);
  report.hom_backward = hom_exists(model, C, A);
  // (x, f, alpha) -> (x, f, (y, g) -> alpha y (g x)) must land in the witnesses of C.
  auto middle = mu_object<Family2<E>>(G, lim);
  bool ok = true;
  for (const auto& w : A.wit()) {
    const Value& x = w[0];
    std::vector<std::pair<Value, Value>> f;
    for (const auto& y : G.cowit()) f.emplace_back(y, w[1].apply(y)[0]);
    const Value xf = Value::pair(x, Value::function(std::move(f)));
    std::vector<std::pair<Value, Value>> F;
    for (const auto& z : middle.cowit()) {
      F.emplace_back(z, w[1].apply(z[0])[1].apply(z[1].apply(x)));
    }
    ok = ok && C.wit().contains(Value::pair(xf, Value::function(std::move(F))));
  }
  report.witness_transformation_typed = ok;
  ok = true;
  for (const auto& z : A.cowit()) {
    const Value& y = z[0];
    std::vector<std::pair<Value, Value>> g;
    for (const auto& x : G.wit()) g.emplace_back(x, z[1].apply(x)[0]);
    const Value yg = Value::pair(y, Value::function(std::move(g)));
    std::vector<std::pair<Value, Value>> Gq;
    for (const auto& w : middle.wit()) {
      Gq.emplace_back(w, z[1].apply(w[0])[1].apply(w[1].apply(y)));
    }
    ok = ok && C.cowit().contains(Value::pair(yg, Value::function(std::move(Gq))));
  }
  report.cowitness_transformation_typed = ok;
  return report;
}

// ---- exponentials ----

template <class B>
struct BangMuReport {
  DialObject<B> bang_of_mu;  // !mu(G)
  DialObject<B> mu_of_bang;  // mu(!G)
  bool hom_forward = false;  // hom(!mu G, mu !G) nonempty
  bool hom_backward = false;
};

template <PosetalBase B>
  requires ExponentialBase<B>
BangMuReport<B> bang_mu_incompatibility(const Dialectica<B>& model,
                                        const TwoLevel<typename B::Object>& G) {
  using E = typename B::Object;
  Dialectica<Dialectica<B>> twice(model, model.limits());
  auto left = model.bang(mu_object<E>(G, model.limits()));
  auto right = mu_object<E>(twice.bang(G), model.limits());
  BangMuReport<B> report{left, right};
  report.hom_forward = hom_exists(model, left, right);
  report.hom_backward = hom_exists(model, right, left);
  return report;
}

}  // namespace dialectica
