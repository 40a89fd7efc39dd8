#include "dialectica/functors.hpp"

#include <set>
#include <string>

namespace dialectica {

namespace {

Value hom_key(const FiniteFunction& f, const FiniteFunction& g) {
  return Value::pair(f.to_value(), g.to_value());
}

Elem fold_tensor(const Lineale& r, const Value& ms, const std::function<Elem(const Value&)>& at) {
  std::vector<Elem> parts;
  for (const auto& y : ms.items()) parts.push_back(at(y));
  return tensor_fold(r, parts);
}

}  // namespace

DialecticaPair::DialecticaPair(const Lineale& r, Limits limits)
    : linear(r, limits), intuitionistic(NonlinearPart(r), limits) {}

LObject map_family(const LObject& G, const std::function<Elem(Elem)>& fn) {
  return LObject(G.wit(), G.cowit(), [G, fn](const Value& x, const Value& y) { return fn(G(x, y)); });
}

IObject lift_multiplication(const DialecticaPair& d, const LObject& G) {
  const Lineale& r = d.lineale();
  return map_family(G, [r](Elem a) { return r.M(a); });
}

IMorphism lift_multiplication(const DialecticaPair& d, const LMorphism& m) {
  auto src = lift_multiplication(d, m.src());
  auto dst = lift_multiplication(d, m.dst());
  const auto& di = d.intuitionistic;
  auto g = FiniteFunction::tabulate(product(src.wit(), dst.cowit()), di.cowit_star(src),
                                    [m](const Value& p) { return multiset_singleton(m.g()(p[1])); });
  return di.from_maps(src, dst, FiniteFunction(src.wit(), dst.wit(), m.f().table()), std::move(g));
}

LObject lift_linearisation(const DialecticaPair& d, const IObject& K) {
  const Lineale& r = d.lineale();
  const auto& lim = d.linear.limits();
  auto cowit = function_space(K.wit(), multiset_space(K.cowit(), lim.multiset_bound, lim), lim);
  return LObject(K.wit(), cowit, [r, K](const Value& x, const Value& h) {
    return fold_tensor(r, h.apply(x), [&](const Value& y) { return r.L(K(x, y)); });
  });
}

// g' = h, x -> h(f x) >>= (v -> g(x, v)).
LMorphism lift_linearisation(const DialecticaPair& d, const IMorphism& m) {
  auto src = lift_linearisation(d, m.src());
  auto dst = lift_linearisation(d, m.dst());
  const auto X = m.src().wit();
  auto g = FiniteFunction::tabulate(dst.cowit(), src.cowit(), [m, X](const Value& h) {
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& x : X) {
      entries.emplace_back(x, multiset_bind(h.apply(m.f()(x)),
                                            [&](const Value& v) { return m.g_at(x, v); }));
    }
    return Value::function(std::move(entries));
  });
  return d.linear.from_maps(src, dst, FiniteFunction(src.wit(), dst.wit(), m.f().table()),
                            std::move(g));
}

IMorphism adjunct_right(const DialecticaPair& d, const LMorphism& m, const IObject& K,
                        const LObject& H) {
  auto MH = lift_multiplication(d, H);
  const auto& di = d.intuitionistic;
  auto g = FiniteFunction::tabulate(product(K.wit(), MH.cowit()), di.cowit_star(K),
                                    [m](const Value& p) { return m.g()(p[1]).apply(p[0]); });
  return di.from_maps(K, MH, FiniteFunction(K.wit(), MH.wit(), m.f().table()), std::move(g));
}

LMorphism adjunct_left(const DialecticaPair& d, const IMorphism& n, const IObject& K,
                       const LObject& H) {
  auto LK = lift_linearisation(d, K);
  const auto X = K.wit();
  auto g = FiniteFunction::tabulate(H.cowit(), LK.cowit(), [n, X](const Value& v) {
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& x : X) entries.emplace_back(x, n.g_at(x, v));
    return Value::function(std::move(entries));
  });
  return d.linear.from_maps(LK, H, FiniteFunction(LK.wit(), H.wit(), n.f().table()), std::move(g));
}

AdjunctionReport adjunction_witness(const DialecticaPair& d, const IObject& K, const LObject& H) {
  AdjunctionReport report;
  auto LK = lift_linearisation(d, K);
  auto MH = lift_multiplication(d, H);
  auto left = d.linear.hom(LK, H);
  auto right = d.intuitionistic.hom(K, MH);
  report.linear_homs = left.size();
  report.intuitionistic_homs = right.size();
  std::set<Value> targets;
  for (const auto& n : right) targets.insert(hom_key(n.f(), n.g()));
  std::set<Value> hit;
  bool total = true;
  report.round_trips = true;
  for (const auto& m : left) {
    auto n = adjunct_right(d, m, K, H);
    const auto key = hom_key(n.f(), n.g());
    total = total && targets.count(key) > 0;
    hit.insert(key);
    report.round_trips = report.round_trips && adjunct_left(d, n, K, H) == m;
  }
  for (const auto& n : right) {
    report.round_trips = report.round_trips && adjunct_right(d, adjunct_left(d, n, K, H), K, H) == n;
  }
  report.bijective = total && hit.size() == left.size() && hit.size() == targets.size();
  return report;
}

bool adjunction_natural(const DialecticaPair& d, const IMorphism& a, const LMorphism& m,
                        const LMorphism& b) {
  const auto& K = a.dst();
  const auto& H = m.dst();
  auto lhs_linear = d.linear.compose(b, d.linear.compose(m, lift_linearisation(d, a)));
  auto lhs = adjunct_right(d, lhs_linear, a.src(), b.dst());
  auto rhs = d.intuitionistic.compose(
      lift_multiplication(d, b), d.intuitionistic.compose(adjunct_right(d, m, K, H), a));
  return lhs.f() == rhs.f() && lhs.g() == rhs.g();
}

LObject endofunctor_A(const LinearModel& model, const LObject& G) {
  const auto& lim = model.limits();
  const Lineale& r = model.base();
  return LObject(G.wit(), multiset_space(G.cowit(), lim.multiset_bound, lim),
                 [r, G](const Value& x, const Value& s) {
                   return fold_tensor(r, s, [&](const Value& y) { return G(x, y); });
                 });
}

LObject endofunctor_B(const LinearModel& model, const LObject& G) {
  return LObject(G.wit(), function_space(G.wit(), G.cowit(), model.limits()),
                 [G](const Value& x, const Value& h) { return G(x, h.apply(x)); });
}

LObject four_part_bang(const LinearModel& model, const LObject& G) {
  const Lineale& r = model.base();
  auto MG = map_family(G, [r](Elem a) { return r.M(a); });
  auto LMG = map_family(MG, [r](Elem a) { return r.L(a); });
  return endofunctor_B(model, endofunctor_A(model, LMG));
}

std::pair<LMorphism, LMorphism> strong_monoidality_witness(const DialecticaPair& d,
                                                           const IObject& K1, const IObject& K2) {
  auto lhs = d.linear.tensor(lift_linearisation(d, K1), lift_linearisation(d, K2));
  auto rhs = lift_linearisation(d, d.intuitionistic.with_(K1, K2));
  const auto X = K1.wit();
  const auto U = K2.wit();
  // rho(x, u) in (Y + V)* split into h(u)(x) and k(x)(u).
  auto split = FiniteFunction::tabulate(rhs.cowit(), lhs.cowit(), [X, U](const Value& rho) {
    std::vector<std::pair<Value, Value>> hs, ks;
    for (const auto& u : U) {
      std::vector<std::pair<Value, Value>> inner;
      for (const auto& x : X) {
        inner.emplace_back(x, multiset_coproduct_iso_inverse(rho.apply(Value::pair(x, u)))[0]);
      }
      hs.emplace_back(u, Value::function(std::move(inner)));
    }
    for (const auto& x : X) {
      std::vector<std::pair<Value, Value>> inner;
      for (const auto& u : U) {
        inner.emplace_back(u, multiset_coproduct_iso_inverse(rho.apply(Value::pair(x, u)))[1]);
      }
      ks.emplace_back(x, Value::function(std::move(inner)));
    }
    return Value::pair(Value::function(std::move(hs)), Value::function(std::move(ks)));
  });
  auto join = FiniteFunction::tabulate(lhs.cowit(), rhs.cowit(), [X, U](const Value& c) {
    std::vector<std::pair<Value, Value>> entries;
    for (const auto& x : X) {
      for (const auto& u : U) {
        entries.emplace_back(Value::pair(x, u),
                             multiset_coproduct_iso(Value::pair(c[0].apply(u).apply(x),
                                                                c[1].apply(x).apply(u))));
      }
    }
    return Value::function(std::move(entries));
  });
  auto there = d.linear.from_maps(lhs, rhs, FiniteFunction(lhs.wit(), rhs.wit(), lhs.wit().elements()),
                                  std::move(split));
  auto back = d.linear.from_maps(rhs, lhs, FiniteFunction(rhs.wit(), lhs.wit(), rhs.wit().elements()),
                                 std::move(join));
  return {there, back};
}

LawReport check_lineale_morphism(const LinealeMorphism& phi) {
  const auto& r = phi.source;
  const auto& t = phi.target;
  LawReport report;
  LawTally shape("element map is total");
  shape.check(phi.F.size() == r.size(), {});
  for (const auto& e : phi.F) shape.check(e.id < t.size(), {std::to_string(e.id)});
  report.results.push_back(shape.result());
  if (shape.failed()) return report;

  auto nm = [&](Elem a) { return r.name(a); };
  LawTally mono("monotone");
  LawTally monoidal("strong monoidal");
  LawTally restrict("restriction lands in S'");
  LawTally square("M'F = GM");
  monoidal.check(phi(r.unit()) == t.unit(), {nm(r.unit())});
  for (auto a : r.objects()) {
    for (auto b : r.objects()) {
      mono.check(!r.leq(a, b) || t.leq(phi(a), phi(b)), {nm(a), nm(b)});
      monoidal.check(phi(r.tensor(a, b)) == t.tensor(phi(a), phi(b)), {nm(a), nm(b)});
    }
    if (r.has_exponential() && t.has_exponential()) {
      if (r.is_nonlinear(a)) restrict.check(t.is_nonlinear(phi(a)), {nm(a)});
      square.check(t.M(phi(a)) == phi(r.M(a)), {nm(a)});
    }
  }
  report.results.push_back(mono.result());
  report.results.push_back(monoidal.result());
  if (r.has_exponential() && t.has_exponential()) {
    report.results.push_back(restrict.result());
    report.results.push_back(square.result());
  }
  return report;
}

LinealeMorphism identity_lineale_morphism(const Lineale& r) {
  return LinealeMorphism{r, r, r.objects()};
}

LObject lift_object(const LinealeMorphism& phi, const LObject& G) {
  return map_family(G, [phi](Elem a) { return phi(a); });
}

LMorphism lift_morphism(const LinealeMorphism& phi, const LinearModel& target, const LMorphism& m) {
  auto src = lift_object(phi, m.src());
  auto dst = lift_object(phi, m.dst());
  return target.from_maps(src, dst, FiniteFunction(src.wit(), dst.wit(), m.f().table()),
                          FiniteFunction(dst.cowit(), src.cowit(), m.g().table()));
}

IObject lift_intuitionistic_object(const LinealeMorphism& phi, const IObject& K) {
  return map_family(K, [phi](Elem a) { return phi(a); });
}

LawReport check_lifted_squares(const LinealeMorphism& phi, const DialecticaPair& src,
                               const DialecticaPair& dst, const std::vector<LObject>& objects,
                               const std::vector<IObject>& intuitionistic_objects) {
  LawReport report;
  LawTally bang("D(F)(!G) = !'(D(F) G)");
  LawTally mult("D_f(M')(D(F) G) = D_f(G)(D_f(M) G)");
  LawTally lin("D_dn(L')(D_f(G) K) = D(F)(D_dn(L) K)");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& G = objects[i];
    const std::vector<std::string> w{"object " + std::to_string(i)};
    bang.check(lift_object(phi, src.linear.bang(G)) == dst.linear.bang(lift_object(phi, G)), w);
    mult.check(lift_multiplication(dst, lift_object(phi, G)) ==
                   lift_intuitionistic_object(phi, lift_multiplication(src, G)),
               w);
  }
  for (std::size_t i = 0; i < intuitionistic_objects.size(); ++i) {
    const auto& K = intuitionistic_objects[i];
    lin.check(lift_linearisation(dst, lift_intuitionistic_object(phi, K)) ==
                  lift_object(phi, lift_linearisation(src, K)),
              {"object " + std::to_string(i)});
  }
  report.results.push_back(bang.result());
  report.results.push_back(mult.result());
  report.results.push_back(lin.result());
  return report;
}

}  // namespace dialectica
