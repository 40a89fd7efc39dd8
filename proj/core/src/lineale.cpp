#include "dialectica/lineale.hpp"

#include <algorithm>

#include "dialectica/errors.hpp"
#include "dialectica/laws.hpp"

namespace dialectica {

Lineale Lineale::from_tables(LinealeTables tables) {
  validate_lineale(tables);
  return Lineale(std::move(tables));
}

Lineale Lineale::unchecked(LinealeTables tables) {
  check_lineale_shapes(tables);
  return Lineale(std::move(tables));
}

std::vector<Elem> Lineale::objects() const {
  std::vector<Elem> xs;
  for (std::uint32_t i = 0; i < size(); ++i) xs.push_back(Elem{i});
  return xs;
}

Elem Lineale::element(std::string_view n) const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (tables_.names[i] == n) return Elem{i};
  }
  throw InvariantViolation("unknown lineale element " + std::string(n));
}

std::optional<Arrow> Lineale::arrow(Elem a, Elem b) const {
  if (!leq(a, b)) return std::nullopt;
  return Arrow{a, b};
}

std::vector<Arrow> Lineale::hom(Elem a, Elem b) const {
  if (leq(a, b)) return {Arrow{a, b}};
  return {};
}

Arrow Lineale::compose(const Arrow& g, const Arrow& f) const {
  if (f.dst != g.src) throw ContractViolation("composing non-matching arrows");
  return Arrow{f.src, g.dst};
}

Arrow Lineale::tensor(const Arrow& f, const Arrow& g) const {
  return Arrow{tensor(f.src, g.src), tensor(f.dst, g.dst)};
}

Arrow Lineale::dual(const Arrow& f) const { return Arrow{dual(f.dst), dual(f.src)}; }

std::optional<Elem> Lineale::meet(Elem a, Elem b) const {
  std::optional<Elem> best;
  for (auto c : objects()) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (!best || leq(*best, c)) {
      best = c;
    }
  }
  if (!best) return std::nullopt;
  for (auto c : objects()) {
    if (leq(c, a) && leq(c, b) && !leq(c, *best)) return std::nullopt;
  }
  return best;
}

std::optional<Elem> Lineale::join(Elem a, Elem b) const {
  std::optional<Elem> best;
  for (auto c : objects()) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (!best || leq(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  for (auto c : objects()) {
    if (leq(a, c) && leq(b, c) && !leq(*best, c)) return std::nullopt;
  }
  return best;
}

std::optional<Elem> Lineale::greatest() const {
  for (auto c : objects()) {
    bool all = true;
    for (auto d : objects()) all = all && leq(d, c);
    if (all) return c;
  }
  return std::nullopt;
}

std::optional<Elem> Lineale::least() const {
  for (auto c : objects()) {
    bool all = true;
    for (auto d : objects()) all = all && leq(c, d);
    if (all) return c;
  }
  return std::nullopt;
}

bool Lineale::has_products() const {
  if (!greatest() || !least()) return false;
  for (auto a : objects()) {
    for (auto b : objects()) {
      if (!meet(a, b) || !join(a, b)) return false;
    }
  }
  return true;
}

Elem Lineale::with_(Elem a, Elem b) const {
  if (auto m = meet(a, b)) return *m;
  throw ContractViolation("lineale has no meet of " + name(a) + " and " + name(b));
}

Elem Lineale::plus(Elem a, Elem b) const {
  if (auto j = join(a, b)) return *j;
  throw ContractViolation("lineale has no join of " + name(a) + " and " + name(b));
}

Elem Lineale::top() const {
  if (auto g = greatest()) return *g;
  throw ContractViolation("lineale has no top element");
}

Elem Lineale::zero() const {
  if (auto l = least()) return *l;
  throw ContractViolation("lineale has no bottom element");
}

Elem Lineale::bang(Elem a) const {
  if (!tables_.bang) throw ContractViolation("lineale has no exponential");
  return Elem{(*tables_.bang)[a.id]};
}

Arrow Lineale::bang(const Arrow& f) const { return Arrow{bang(f.src), bang(f.dst)}; }

std::vector<Elem> Lineale::nonlinear_objects() const {
  std::vector<Elem> s;
  for (auto a : objects()) {
    if (bang(a) == a) s.push_back(a);
  }
  return s;
}

bool operator==(const Lineale& a, const Lineale& b) {
  const auto& x = a.tables_;
  const auto& y = b.tables_;
  return x.names == y.names && x.leq == y.leq && x.tensor == y.tensor && x.unit == y.unit &&
         x.dual == y.dual && x.bang == y.bang;
}

Lineale boolean_lineale() {
  LinealeTables t;
  t.names = {"0", "1"};
  t.leq = {{true, true}, {false, true}};
  t.tensor = {{0, 0}, {0, 1}};
  t.unit = 1;
  t.dual = {1, 0};
  t.bang = std::vector<std::uint32_t>{0, 1};
  return Lineale::from_tables(std::move(t));
}

Lineale lukasiewicz_chain() {
  // Elements in units of 1/2: 0, 1, 2.
  LinealeTables t;
  t.names = {"0", "1/2", "1"};
  t.leq.assign(3, std::vector<bool>(3));
  t.tensor.assign(3, std::vector<std::uint32_t>(3));
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      t.leq[a][b] = a <= b;
      t.tensor[a][b] = a + b >= 2 ? a + b - 2 : 0;
    }
  }
  t.unit = 2;
  t.dual = {2, 1, 0};
  t.bang = std::vector<std::uint32_t>{0, 0, 2};
  return Lineale::from_tables(std::move(t));
}

}  // namespace dialectica
