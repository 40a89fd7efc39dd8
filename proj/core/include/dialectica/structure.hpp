#pragma once

#include <utility>
#include <vector>

#include "dialectica/dialectica.hpp"
#include "dialectica/finset.hpp"

namespace dialectica {

// Forward and backward tables of a structural morphism.  They depend only on
// the index sets of the objects involved, so the builders below work for any
// entry type.
struct IndexMaps {
  FiniteFunction f;
  FiniteFunction g;
};

namespace maps {

inline Value fn_over(const EffectiveSet& dom, const std::function<Value(const Value&)>& rule) {
  std::vector<std::pair<Value, Value>> entries;
  entries.reserve(dom.size());
  for (const auto& d : dom) entries.emplace_back(d, rule(d));
  return Value::function(std::move(entries));
}

// (A (x) B) (x) C -> A (x) (B (x) C).
template <class E>
IndexMaps associator(const Family2<E>& A, const Family2<E>& B, const Family2<E>& C,
                     const Family2<E>& lhs, const Family2<E>& rhs) {
  const auto X = A.wit();
  const auto U = B.wit();
  const auto W = C.wit();
  const auto XU = product(X, U);
  auto f = FiniteFunction::tabulate(lhs.wit(), rhs.wit(), [](const Value& w) {
    return Value::pair(w[0][0], Value::pair(w[0][1], w[1]));
  });
  auto g = FiniteFunction::tabulate(rhs.cowit(), lhs.cowit(), [=](const Value& c) {
    const Value& H = c[0];
    const Value& K = c[1];
    Value F = fn_over(W, [&](const Value& w) {
      return Value::pair(fn_over(U, [&](const Value& u) { return H.apply(Value::pair(u, w)); }),
                         fn_over(X, [&](const Value& x) { return K.apply(x)[0].apply(w); }));
    });
    Value G = fn_over(XU, [&](const Value& xu) { return K.apply(xu[0])[1].apply(xu[1]); });
    return Value::pair(F, G);
  });
  return {std::move(f), std::move(g)};
}

// A (x) (B (x) C) -> (A (x) B) (x) C.
template <class E>
IndexMaps associator_inverse(const Family2<E>& A, const Family2<E>& B, const Family2<E>& C,
                             const Family2<E>& lhs, const Family2<E>& rhs) {
  const auto X = A.wit();
  const auto U = B.wit();
  const auto W = C.wit();
  const auto UW = product(U, W);
  auto f = FiniteFunction::tabulate(lhs.wit(), rhs.wit(), [](const Value& w) {
    return Value::pair(Value::pair(w[0], w[1][0]), w[1][1]);
  });
  auto g = FiniteFunction::tabulate(rhs.cowit(), lhs.cowit(), [=](const Value& c) {
    const Value& F = c[0];
    const Value& G = c[1];
    Value H = fn_over(UW, [&](const Value& uw) { return F.apply(uw[1])[0].apply(uw[0]); });
    Value K = fn_over(X, [&](const Value& x) {
      return Value::pair(fn_over(W, [&](const Value& w) { return F.apply(w)[1].apply(x); }),
                         fn_over(U, [&](const Value& u) { return G.apply(Value::pair(x, u)); }));
    });
    return Value::pair(H, K);
  });
  return {std::move(f), std::move(g)};
}

// 1 (x) A -> A.
template <class E>
IndexMaps left_unitor(const Family2<E>& A, const Family2<E>& lhs) {
  const Value star = Value::unit();
  const auto X = A.wit();
  auto f = FiniteFunction::tabulate(lhs.wit(), A.wit(), [](const Value& w) { return w[1]; });
  auto g = FiniteFunction::tabulate(A.cowit(), lhs.cowit(), [=](const Value& y) {
    return Value::pair(fn_over(X, [&](const Value&) { return star; }),
                       Value::function({{star, y}}));
  });
  return {std::move(f), std::move(g)};
}

template <class E>
IndexMaps left_unitor_inverse(const Family2<E>& A, const Family2<E>& rhs) {
  const Value star = Value::unit();
  auto f = FiniteFunction::tabulate(A.wit(), rhs.wit(),
                                    [=](const Value& x) { return Value::pair(star, x); });
  auto g = FiniteFunction::tabulate(rhs.cowit(), A.cowit(),
                                    [=](const Value& c) { return c[1].apply(star); });
  return {std::move(f), std::move(g)};
}

// A (x) 1 -> A.
template <class E>
IndexMaps right_unitor(const Family2<E>& A, const Family2<E>& lhs) {
  const Value star = Value::unit();
  const auto X = A.wit();
  auto f = FiniteFunction::tabulate(lhs.wit(), A.wit(), [](const Value& w) { return w[0]; });
  auto g = FiniteFunction::tabulate(A.cowit(), lhs.cowit(), [=](const Value& y) {
    return Value::pair(Value::function({{star, y}}),
                       fn_over(X, [&](const Value&) { return star; }));
  });
  return {std::move(f), std::move(g)};
}

template <class E>
IndexMaps right_unitor_inverse(const Family2<E>& A, const Family2<E>& rhs) {
  const Value star = Value::unit();
  auto f = FiniteFunction::tabulate(A.wit(), rhs.wit(),
                                    [=](const Value& x) { return Value::pair(x, star); });
  auto g = FiniteFunction::tabulate(rhs.cowit(), A.cowit(),
                                    [=](const Value& c) { return c[0].apply(star); });
  return {std::move(f), std::move(g)};
}

// A (x) B -> B (x) A.
template <class E>
IndexMaps symmetry(const Family2<E>& lhs, const Family2<E>& rhs) {
  auto f = FiniteFunction::tabulate(lhs.wit(), rhs.wit(),
                                    [](const Value& w) { return Value::pair(w[1], w[0]); });
  auto g = FiniteFunction::tabulate(rhs.cowit(), lhs.cowit(),
                                    [](const Value& c) { return Value::pair(c[1], c[0]); });
  return {std::move(f), std::move(g)};
}

}  // namespace maps

// ---- structural morphisms of the linear construction over a posetal base ----

template <PosetalBase B>
DialMorphism<B> associator(const Dialectica<B>& d, const DialObject<B>& A, const DialObject<B>& Bo,
                           const DialObject<B>& C) {
  auto lhs = d.tensor(d.tensor(A, Bo), C);
  auto rhs = d.tensor(A, d.tensor(Bo, C));
  auto m = maps::associator(A, Bo, C, lhs, rhs);
  return d.from_maps(lhs, rhs, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> associator_inverse(const Dialectica<B>& d, const DialObject<B>& A,
                                   const DialObject<B>& Bo, const DialObject<B>& C) {
  auto lhs = d.tensor(A, d.tensor(Bo, C));
  auto rhs = d.tensor(d.tensor(A, Bo), C);
  auto m = maps::associator_inverse(A, Bo, C, lhs, rhs);
  return d.from_maps(lhs, rhs, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> left_unitor(const Dialectica<B>& d, const DialObject<B>& A) {
  auto lhs = d.tensor(d.one(), A);
  auto m = maps::left_unitor(A, lhs);
  return d.from_maps(lhs, A, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> left_unitor_inverse(const Dialectica<B>& d, const DialObject<B>& A) {
  auto rhs = d.tensor(d.one(), A);
  auto m = maps::left_unitor_inverse(A, rhs);
  return d.from_maps(A, rhs, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> right_unitor(const Dialectica<B>& d, const DialObject<B>& A) {
  auto lhs = d.tensor(A, d.one());
  auto m = maps::right_unitor(A, lhs);
  return d.from_maps(lhs, A, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> right_unitor_inverse(const Dialectica<B>& d, const DialObject<B>& A) {
  auto rhs = d.tensor(A, d.one());
  auto m = maps::right_unitor_inverse(A, rhs);
  return d.from_maps(A, rhs, std::move(m.f), std::move(m.g));
}

template <PosetalBase B>
DialMorphism<B> symmetry(const Dialectica<B>& d, const DialObject<B>& A, const DialObject<B>& Bo) {
  auto lhs = d.tensor(A, Bo);
  auto rhs = d.tensor(Bo, A);
  auto m = maps::symmetry(lhs, rhs);
  return d.from_maps(lhs, rhs, std::move(m.f), std::move(m.g));
}

namespace maps {

// Tables of curry (f, g) : A (x) B -> C as a pair A -> B -o C:
// f'(x) = (z -> g2(z)(x), u -> f(x, u)), g'(u, z) = g1(z)(u).
template <class E>
IndexMaps curry(const Family2<E>& A, const Family2<E>& B, const Family2<E>& C,
                const Family2<E>& target, const FiniteFunction& f, const FiniteFunction& g) {
  const auto U = B.wit();
  const auto Z = C.cowit();
  auto f2 = FiniteFunction::tabulate(A.wit(), target.wit(), [&](const Value& x) {
    return Value::pair(fn_over(Z, [&](const Value& z) { return g(z)[1].apply(x); }),
                       fn_over(U, [&](const Value& u) { return f(Value::pair(x, u)); }));
  });
  auto g2 = FiniteFunction::tabulate(target.cowit(), A.cowit(), [&](const Value& uz) {
    return g(uz[1])[0].apply(uz[0]);
  });
  return {std::move(f2), std::move(g2)};
}

// The inverse of curry on tables.
template <class E>
IndexMaps uncurry(const Family2<E>& A, const Family2<E>& B, const Family2<E>& C,
                  const Family2<E>& source, const FiniteFunction& f, const FiniteFunction& g) {
  const auto X = A.wit();
  const auto U = B.wit();
  auto f2 = FiniteFunction::tabulate(source.wit(), C.wit(), [&](const Value& xu) {
    return f(xu[0])[1].apply(xu[1]);
  });
  auto g2 = FiniteFunction::tabulate(C.cowit(), source.cowit(), [&](const Value& z) {
    return Value::pair(fn_over(U, [&](const Value& u) { return g(Value::pair(u, z)); }),
                       fn_over(X, [&](const Value& x) { return f(x)[0].apply(z); }));
  });
  return {std::move(f2), std::move(g2)};
}

}  // namespace maps

// hom(A (x) B, C) -> hom(A, B -o C).  Throws ContractViolation if the result
// is not a morphism.
template <PosetalBase B>
DialMorphism<B> curry(const Dialectica<B>& d, const DialMorphism<B>& m, const DialObject<B>& A,
                      const DialObject<B>& Bo) {
  auto target = d.lollipop(Bo, m.dst());
  auto t = maps::curry(A, Bo, m.dst(), target, m.f(), m.g());
  return d.from_maps(A, target, std::move(t.f), std::move(t.g));
}

// hom(A, B -o C) -> hom(A (x) B, C).
template <PosetalBase B>
DialMorphism<B> uncurry(const Dialectica<B>& d, const DialMorphism<B>& n, const DialObject<B>& Bo,
                        const DialObject<B>& C) {
  auto source = d.tensor(n.src(), Bo);
  auto t = maps::uncurry(n.src(), Bo, C, source, n.f(), n.g());
  return d.from_maps(source, C, std::move(t.f), std::move(t.g));
}

// Projections and pairing for with_, injections and copairing for plus.
template <PosetalBase B>
DialMorphism<B> project(const Dialectica<B>& d, const DialObject<B>& A, const DialObject<B>& Bo,
                        bool second) {
  auto prod = d.with_(A, Bo);
  const auto& target = second ? Bo : A;
  auto f = FiniteFunction::tabulate(prod.wit(), target.wit(),
                                    [second](const Value& w) { return w[second ? 1 : 0]; });
  auto g = FiniteFunction::tabulate(target.cowit(), prod.cowit(), [second](const Value& y) {
    return second ? Value::inr(y) : Value::inl(y);
  });
  return d.from_maps(prod, target, std::move(f), std::move(g));
}

template <PosetalBase B>
DialMorphism<B> pairing(const Dialectica<B>& d, const DialMorphism<B>& m, const DialMorphism<B>& n) {
  if (!(m.src() == n.src())) throw ContractViolation("pairing morphisms with different sources");
  auto prod = d.with_(m.dst(), n.dst());
  auto f = FiniteFunction::tabulate(m.src().wit(), prod.wit(), [&](const Value& c) {
    return Value::pair(m.f()(c), n.f()(c));
  });
  auto g = FiniteFunction::tabulate(prod.cowit(), m.src().cowit(), [&](const Value& y) {
    return y.is(Value::Kind::Inl) ? m.g()(y.payload()) : n.g()(y.payload());
  });
  return d.from_maps(m.src(), prod, std::move(f), std::move(g));
}

template <PosetalBase B>
DialMorphism<B> inject(const Dialectica<B>& d, const DialObject<B>& A, const DialObject<B>& Bo,
                       bool second) {
  auto sum = d.plus(A, Bo);
  const auto& source = second ? Bo : A;
  auto f = FiniteFunction::tabulate(source.wit(), sum.wit(), [second](const Value& x) {
    return second ? Value::inr(x) : Value::inl(x);
  });
  auto g = FiniteFunction::tabulate(sum.cowit(), source.cowit(),
                                    [second](const Value& c) { return c[second ? 1 : 0]; });
  return d.from_maps(source, sum, std::move(f), std::move(g));
}

template <PosetalBase B>
DialMorphism<B> copairing(const Dialectica<B>& d, const DialMorphism<B>& m, const DialMorphism<B>& n) {
  if (!(m.dst() == n.dst())) throw ContractViolation("copairing morphisms with different targets");
  auto sum = d.plus(m.src(), n.src());
  auto f = FiniteFunction::tabulate(sum.wit(), m.dst().wit(), [&](const Value& w) {
    return w.is(Value::Kind::Inl) ? m.f()(w.payload()) : n.f()(w.payload());
  });
  auto g = FiniteFunction::tabulate(m.dst().cowit(), sum.cowit(), [&](const Value& z) {
    return Value::pair(m.g()(z), n.g()(z));
  });
  return d.from_maps(sum, m.dst(), std::move(f), std::move(g));
}

}  // namespace dialectica
