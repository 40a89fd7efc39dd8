#include "dialectica/logic.hpp"

#include "dialectica/errors.hpp"
#include "dialectica/monadic.hpp"
#include "dialectica/posetal_search.hpp"

namespace dialectica {

namespace {

using K = Formula::Kind;
using TwiceModel = Dialectica<LinearModel>;

Value const_fn(const EffectiveSet& dom, const Value& v) {
  std::vector<std::pair<Value, Value>> entries;
  for (const auto& d : dom) entries.emplace_back(d, v);
  return Value::function(std::move(entries));
}

void require_products(const Lineale& r) {
  if (!r.has_products()) throw ShapeUnsupported("additive connectives need a lattice base");
}

}  // namespace

Valuation parse_valuation(const Lineale& r, const std::vector<std::string>& assignments) {
  Valuation v;
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == a.size())
      throw ParseError("expected name=value, got '" + a + "'", 0);
    v[a.substr(0, eq)] = r.element(a.substr(eq + 1));
  }
  return v;
}

LObject interpret(const LinearModel& model, const Formula& f, const Valuation& v) {
  const Lineale& r = model.base();
  auto sub = [&](const FormulaPtr& p) { return interpret(model, *p, v); };
  switch (f.kind()) {
    case K::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw ContractViolation("atom '" + f.name() + "' has no value");
      return model.eta(it->second);
    }
    case K::One: return model.one();
    case K::Bot: return model.bot();
    case K::Top: return model.top();
    case K::Zero: return model.zero();
    case K::Dual: return model.dual(sub(f.left()));
    case K::Tensor: return model.tensor(sub(f.left()), sub(f.right()));
    case K::Par: return model.par(sub(f.left()), sub(f.right()));
    case K::With: return model.with_(sub(f.left()), sub(f.right()));
    case K::Plus: return model.plus(sub(f.left()), sub(f.right()));
    case K::Lollipop: return model.lollipop(sub(f.left()), sub(f.right()));
    case K::Bang:
      if (!r.has_exponential()) throw ShapeUnsupported("the base has no exponential");
      return model.bang(sub(f.left()));
    case K::Whynot:
      if (!r.has_exponential()) throw ShapeUnsupported("the base has no exponential");
      return model.whynot(sub(f.left()));
    case K::SimAdd: return simadd_interpret(model, f.family(), v);
  }
  throw ContractViolation("unknown formula kind");
}

Elem interpret_base(const Lineale& r, const Formula& f, const Valuation& v) {
  auto sub = [&](const FormulaPtr& p) { return interpret_base(r, *p, v); };
  switch (f.kind()) {
    case K::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw ContractViolation("atom '" + f.name() + "' has no value");
      return it->second;
    }
    case K::One: return r.unit();
    case K::Bot: return r.bottom();
    case K::Top: require_products(r); return r.top();
    case K::Zero: require_products(r); return r.zero();
    case K::Dual: return r.dual(sub(f.left()));
    case K::Tensor: return r.tensor(sub(f.left()), sub(f.right()));
    case K::Par: return r.par(sub(f.left()), sub(f.right()));
    case K::With: require_products(r); return r.with_(sub(f.left()), sub(f.right()));
    case K::Plus: require_products(r); return r.plus(sub(f.left()), sub(f.right()));
    case K::Lollipop: return r.lollipop(sub(f.left()), sub(f.right()));
    case K::Bang: return r.bang(sub(f.left()));
    case K::Whynot: return r.whynot(sub(f.left()));
    case K::SimAdd: throw ShapeUnsupported("simultaneous additives have no value in the lineale");
  }
  throw ContractViolation("unknown formula kind");
}

bool idempotent(const Lineale& r) {
  for (auto a : r.objects()) {
    if (!(r.tensor(a, a) == a)) return false;
  }
  return true;
}

std::string ValidityResult::verdict() const {
  const std::string at = "-at-bound-" + std::to_string(bound);
  if (valid) return cowit_truncated && !bound_independent ? "valid" + at : "valid";
  return wit_truncated && !bound_independent ? "invalid" + at : "invalid";
}

ValidityResult is_valid(const LinearModel& model, const LObject& G) {
  const Lineale& r = model.base();
  ValidityResult out;
  out.bound = model.limits().multiset_bound;
  out.wit_truncated = G.wit().is_truncated();
  out.cowit_truncated = G.cowit().is_truncated();
  out.bound_independent = idempotent(r);
  out.witnesses = G.wit().size();
  out.counter_witnesses = G.cowit().size();
  const Elem one = r.unit();
  for (std::size_t xi = 0; xi < G.wit().size(); ++xi) {
    std::optional<std::size_t> bad;
    for (std::size_t yi = 0; yi < G.cowit().size(); ++yi) {
      if (!r.leq(one, G.at(xi, yi))) {
        bad = yi;
        break;
      }
    }
    if (bad) {
      out.refutation.emplace_back(G.wit()[xi], G.cowit()[*bad]);
      continue;
    }
    out.valid = true;
    out.witness = G.wit()[xi];
    out.refutation.clear();
    for (std::size_t yi = 0; yi < G.cowit().size(); ++yi) {
      out.strategy.emplace_back(G.cowit()[yi], Arrow{one, G.at(xi, yi)});
    }
    break;
  }
  return out;
}

ValidityResult is_valid(const LinearModel& model, const Formula& f, const Valuation& v) {
  return is_valid(model, interpret(model, f, v));
}

namespace {

struct Bids {
  LObject object;
  Elem value;
  Value x;
  Value y;
};

Bids bids(const LinearModel& model, const Formula& f, const Valuation& v);

Bids tensor_bids(const LinearModel& model, const Bids& a, const Bids& b, Elem value) {
  auto obj = model.tensor(a.object, b.object);
  return {obj, value, Value::pair(a.x, b.x),
          Value::pair(const_fn(b.object.wit(), a.y), const_fn(a.object.wit(), b.y))};
}

Bids dual_bids(const LinearModel& model, const Bids& a, Elem value) {
  return {model.dual(a.object), value, a.y, a.x};
}

Bids bids(const LinearModel& model, const Formula& f, const Valuation& v) {
  const Lineale& r = model.base();
  const Value star = Value::unit();
  const Elem value = interpret_base(r, f, v);
  switch (f.kind()) {
    case K::Atom:
    case K::One:
    case K::Bot: return {interpret(model, f, v), value, star, star};
    case K::Dual: return dual_bids(model, bids(model, *f.left(), v), value);
    case K::Tensor:
      return tensor_bids(model, bids(model, *f.left(), v), bids(model, *f.right(), v), value);
    case K::Par: {
      auto a = bids(model, *f.left(), v);
      auto b = bids(model, *f.right(), v);
      return {model.par(a.object, b.object), value,
              Value::pair(const_fn(b.object.cowit(), a.x), const_fn(a.object.cowit(), b.x)),
              Value::pair(a.y, b.y)};
    }
    case K::Lollipop: {
      auto a = bids(model, *f.left(), v);
      auto b = bids(model, *f.right(), v);
      auto nb = dual_bids(model, b, r.dual(b.value));
      auto t = tensor_bids(model, a, nb, r.tensor(a.value, nb.value));
      return dual_bids(model, t, value);
    }
    case K::Bang: {
      auto a = bids(model, *f.left(), v);
      return {model.bang(a.object), value, a.x,
              const_fn(a.object.wit(), multiset_singleton(a.y))};
    }
    case K::Whynot: {
      auto a = bids(model, *f.left(), v);
      return {model.whynot(a.object), value,
              const_fn(a.object.cowit(), multiset_singleton(a.x)), a.y};
    }
    default:
      throw ShapeUnsupported("completeness witnesses cover the multiplicative-exponential fragment");
  }
}

}  // namespace

CompletenessWitness completeness_witnesses(const LinearModel& model, const Formula& f,
                                           const Valuation& v) {
  const Lineale& r = model.base();
  auto b = bids(model, f, v);
  CompletenessWitness out{b.object, b.value, b.x, b.y, {}, {}, true, true};
  const auto& G = b.object;
  for (const auto& y : G.cowit()) {
    auto a = r.arrow(b.value, G(b.x, y));
    if (!a) {
      out.pi_typed = false;
      break;
    }
    out.pi.push_back(*a);
  }
  for (const auto& x : G.wit()) {
    auto a = r.arrow(G(x, b.y), b.value);
    if (!a) {
      out.sigma_typed = false;
      break;
    }
    out.sigma.push_back(*a);
  }
  return out;
}

RelativeCompleteness relative_completeness(const LinearModel& model, const Formula& f,
                                           const Valuation& v) {
  const Lineale& r = model.base();
  auto w = completeness_witnesses(model, f, v);
  RelativeCompleteness out;
  out.validity = is_valid(model, w.object);
  out.base_valid = r.leq(r.unit(), w.value);
  if (!out.validity.valid) return out;
  const Value& x0 = *out.validity.witness;
  const Elem at = w.object(x0, w.y);
  auto pi = r.arrow(r.unit(), at);
  auto sigma = r.arrow(at, w.value);
  if (!pi || !sigma)
    throw ContractViolation("validity strategy and completeness witness do not compose");
  out.composed = r.compose(*sigma, *pi);
  return out;
}

// ---- simultaneous additives ----

TwoLevelObject simadd_family(const LinearModel& model, const SimAddFamily& fam, const Valuation& v) {
  return TwoLevelObject(fam.X, fam.Y, [model, fam, v](const Value& x, const Value& y) {
    return interpret(model, *fam.fam(x, y), v);
  });
}

LObject simadd_interpret(const LinearModel& model, const SimAddFamily& fam, const Valuation& v) {
  return mu_object<Elem>(simadd_family(model, fam, v), model.limits());
}

std::pair<LMorphism, LMorphism> simadd_degenerate_iso(const LinearModel& model,
                                                      const TwoLevelObject& P) {
  const auto mu = mu_object<Elem>(P, model.limits());
  const auto& X = P.wit();
  const auto& Y = P.cowit();
  if (Y.size() == 1 && X.size() == 2) {
    const Value y = Y[0];
    const auto sum = model.plus(P(X[0], y), P(X[1], y));
    // (x, h) <-> inl/inr h(y);  (x -> v_x) <-> (v_0, v_1).
    auto to_f = FiniteFunction::tabulate(mu.wit(), sum.wit(), [&](const Value& w) {
      const Value u = w[1].apply(y);
      return w[0] == X[0] ? Value::inl(u) : Value::inr(u);
    });
    auto to_g = FiniteFunction::tabulate(sum.cowit(), mu.cowit(), [&](const Value& c) {
      return Value::pair(y, Value::function({{X[0], c[0]}, {X[1], c[1]}}));
    });
    auto from_f = FiniteFunction::tabulate(sum.wit(), mu.wit(), [&](const Value& s) {
      const Value& x = s.is(Value::Kind::Inl) ? X[0] : X[1];
      return Value::pair(x, Value::function({{y, s.payload()}}));
    });
    auto from_g = FiniteFunction::tabulate(mu.cowit(), sum.cowit(), [&](const Value& z) {
      return Value::pair(z[1].apply(X[0]), z[1].apply(X[1]));
    });
    return {model.from_maps(mu, sum, std::move(to_f), std::move(to_g)),
            model.from_maps(sum, mu, std::move(from_f), std::move(from_g))};
  }
  if (X.size() == 1 && Y.size() == 2) {
    const Value x = X[0];
    const auto prod = model.with_(P(x, Y[0]), P(x, Y[1]));
    auto to_f = FiniteFunction::tabulate(mu.wit(), prod.wit(), [&](const Value& w) {
      return Value::pair(w[1].apply(Y[0]), w[1].apply(Y[1]));
    });
    auto to_g = FiniteFunction::tabulate(prod.cowit(), mu.cowit(), [&](const Value& c) {
      const Value& y = c.is(Value::Kind::Inl) ? Y[0] : Y[1];
      return Value::pair(y, Value::function({{x, c.payload()}}));
    });
    auto from_f = FiniteFunction::tabulate(prod.wit(), mu.wit(), [&](const Value& p) {
      return Value::pair(x, Value::function({{Y[0], p[0]}, {Y[1], p[1]}}));
    });
    auto from_g = FiniteFunction::tabulate(mu.cowit(), prod.cowit(), [&](const Value& z) {
      const Value v = z[1].apply(x);
      return z[0] == Y[0] ? Value::inl(v) : Value::inr(v);
    });
    return {model.from_maps(mu, prod, std::move(to_f), std::move(to_g)),
            model.from_maps(prod, mu, std::move(from_f), std::move(from_g))};
  }
  throw ShapeUnsupported("degenerate simultaneous additives have index sets 2 x 1 or 1 x 2");
}

LMorphism simadd_rule_check(const LinearModel& model, const SimAddRule& rule) {
  const std::size_t m = rule.left.size();
  const std::size_t n = rule.right.size();
  if (m < 1 || m > 2 || n < 1 || n > 2)
    throw ShapeUnsupported("the rule is checked for one or two formulas on each side");
  if (rule.f.size() != n || rule.g.size() != m)
    throw ContractViolation("the rule needs one f per right formula and one g per left formula");
  const TwiceModel twice(model, model.limits());
  const Value star = Value::unit();

  const auto P = m == 1 ? rule.left[0] : twice.tensor(rule.left[0], rule.left[1]);
  const auto Q = n == 1 ? rule.right[0] : twice.par(rule.right[0], rule.right[1]);
  auto xs_of = [m](const Value& w) {
    return m == 1 ? std::vector<Value>{w} : std::vector<Value>{w[0], w[1]};
  };
  auto vs_of = [n](const Value& c) {
    return n == 1 ? std::vector<Value>{c} : std::vector<Value>{c[0], c[1]};
  };

  auto f = FiniteFunction::tabulate(P.wit(), Q.wit(), [&](const Value& w) {
    const auto xs = xs_of(w);
    if (n == 1) return rule.f[0](xs, {star});
    const auto& V1 = rule.right[0].cowit();
    const auto& V2 = rule.right[1].cowit();
    std::vector<std::pair<Value, Value>> h, k;
    for (const auto& v2 : V2) h.emplace_back(v2, rule.f[0](xs, {star, v2}));
    for (const auto& v1 : V1) k.emplace_back(v1, rule.f[1](xs, {v1, star}));
    return Value::pair(Value::function(std::move(h)), Value::function(std::move(k)));
  });
  auto g = FiniteFunction::tabulate(Q.cowit(), P.cowit(), [&](const Value& c) {
    const auto vs = vs_of(c);
    if (m == 1) return rule.g[0]({star}, vs);
    const auto& X1 = rule.left[0].wit();
    const auto& X2 = rule.left[1].wit();
    std::vector<std::pair<Value, Value>> h, k;
    for (const auto& x2 : X2) h.emplace_back(x2, rule.g[0]({star, x2}, vs));
    for (const auto& x1 : X1) k.emplace_back(x1, rule.g[1]({x1, star}, vs));
    return Value::pair(Value::function(std::move(h)), Value::function(std::move(k)));
  });

  std::vector<LMorphism> alpha;
  for (std::size_t wi = 0; wi < P.wit().size(); ++wi) {
    for (std::size_t ci = 0; ci < Q.cowit().size(); ++ci) {
      const Value& w = P.wit()[wi];
      const Value& c = Q.cowit()[ci];
      const auto src = P(w, g.at(ci));
      const auto dst = Q(f.at(wi), c);
      std::optional<LMorphism> found;
      if (rule.premise) {
        found = rule.premise(xs_of(w), vs_of(c));
      } else {
        found = find_hom(model, src, dst);
        if (!found)
          throw ContractViolation("no premise morphism at (" + w.to_string() + ", " + c.to_string() + ")");
      }
      auto p = std::move(*found);
      if (!(p.src() == src) || !(p.dst() == dst) || !model.well_typed(p))
        throw ContractViolation("premise at (" + w.to_string() + ", " + c.to_string() +
                                ") has the wrong type");
      alpha.push_back(std::move(p));
    }
  }
  DialMorphism<LinearModel> premises(P, Q, std::move(f), std::move(g), std::move(alpha));
  auto conclusion = mu_morphism<Lineale>(premises, model.limits());
  if (m == 2) conclusion = model.compose(conclusion, lax_monoidal_map(model, rule.left[0], rule.left[1]));
  if (n == 2) {
    auto colax = model.dual(
        lax_monoidal_map(model, twice.dual(rule.right[0]), twice.dual(rule.right[1])));
    conclusion = model.compose(colax, conclusion);
  }
  return conclusion;
}

PrincipleReport parallel_choice_tensor(const LinearModel& model, const TwoLevelObject& Phi,
                                       const TwoLevelObject& Psi) {
  const TwiceModel twice(model, model.limits());
  const auto& lim = model.limits();
  auto lhs = mu_object<Elem>(twice.tensor(Phi, Psi), lim);
  auto rhs = model.tensor(mu_object<Elem>(Phi, lim), mu_object<Elem>(Psi, lim));
  return {"parallel-choice-tensor", lhs, rhs, find_hom(model, lhs, rhs)};
}

PrincipleReport plus_distribution(const LinearModel& model, const TwoLevelObject& Phi,
                                  const TwoLevelObject& Psi) {
  const TwiceModel twice(model, model.limits());
  const auto& lim = model.limits();
  auto lhs = mu_object<Elem>(twice.plus(Phi, Psi), lim);
  auto rhs = model.plus(mu_object<Elem>(Phi, lim), mu_object<Elem>(Psi, lim));
  return {"plus-distribution", lhs, rhs, find_hom(model, lhs, rhs)};
}

BotTensorTop bot_tensor_top_iso(const LinearModel& model) {
  const auto obj = model.tensor(model.bot(), model.top());
  const auto top = model.top();
  const Value star = Value::unit();
  auto to = model.from_maps(
      obj, top,
      FiniteFunction::tabulate(obj.wit(), top.wit(), [star](const Value&) { return star; }),
      FiniteFunction::tabulate(top.cowit(), obj.cowit(), [](const Value& c) { return c; }));
  auto from = model.from_maps(
      top, obj,
      FiniteFunction::tabulate(top.wit(), obj.wit(),
                               [star](const Value&) { return Value::pair(star, star); }),
      FiniteFunction::tabulate(obj.cowit(), top.cowit(), [](const Value& c) { return c; }));
  const bool inverse = model.compose(from, to) == model.identity(obj) &&
                       model.compose(to, from) == model.identity(top);
  return {obj, to, from, inverse};
}

}  // namespace dialectica
