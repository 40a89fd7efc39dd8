#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dialectica {

// Element of a finite lineale, by index into its carrier.
struct Elem {
  std::uint32_t id = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

// The unique morphism src -> dst of a posetal model (exists iff src <= dst).
struct Arrow {
  Elem src;
  Elem dst;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Raw operation tables of a finite lineale.
struct LinealeTables {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;             // leq[a][b] iff a <= b
  std::vector<std::vector<std::uint32_t>> tensor;  // tensor[a][b]
  std::uint32_t unit = 0;
  std::vector<std::uint32_t> dual;
  std::optional<std::vector<std::uint32_t>> bang;
};

// A *-autonomous poset, optionally with an exponential.  The nonlinear part S
// is the set of fixed points of !, with L the inclusion and M = !.
class Lineale {
 public:
  using Object = Elem;
  using Morphism = Arrow;

  // Validates every law; throws AxiomViolation naming the first failure.
  static Lineale from_tables(LinealeTables tables);
  // Skips validation; for building deliberately broken fixtures.
  static Lineale unchecked(LinealeTables tables);

  std::size_t size() const { return tables_.names.size(); }
  std::vector<Elem> objects() const;
  const std::string& name(Elem a) const { return tables_.names.at(a.id); }
  Elem element(std::string_view name) const;
  std::string to_string(Elem a) const { return name(a); }
  const LinealeTables& tables() const { return tables_; }

  bool leq(Elem a, Elem b) const { return tables_.leq[a.id][b.id]; }
  std::optional<Arrow> arrow(Elem a, Elem b) const;
  std::vector<Arrow> hom(Elem a, Elem b) const;
  Elem source(const Arrow& f) const { return f.src; }
  Elem target(const Arrow& f) const { return f.dst; }
  Arrow identity(Elem a) const { return {a, a}; }
  // g after f.
  Arrow compose(const Arrow& g, const Arrow& f) const;

  Elem unit() const { return Elem{tables_.unit}; }
  Elem tensor(Elem a, Elem b) const { return Elem{tables_.tensor[a.id][b.id]}; }
  Arrow tensor(const Arrow& f, const Arrow& g) const;
  Elem dual(Elem a) const { return Elem{tables_.dual[a.id]}; }
  Arrow dual(const Arrow& f) const;
  Elem bottom() const { return dual(unit()); }
  Elem par(Elem a, Elem b) const { return dual(tensor(dual(a), dual(b))); }
  Elem lollipop(Elem a, Elem b) const { return dual(tensor(a, dual(b))); }

  std::optional<Elem> meet(Elem a, Elem b) const;
  std::optional<Elem> join(Elem a, Elem b) const;
  std::optional<Elem> greatest() const;
  std::optional<Elem> least() const;
  bool has_products() const;
  Elem with_(Elem a, Elem b) const;
  Elem plus(Elem a, Elem b) const;
  Elem top() const;
  Elem zero() const;

  bool has_exponential() const { return tables_.bang.has_value(); }
  Elem bang(Elem a) const;
  Arrow bang(const Arrow& f) const;
  Elem whynot(Elem a) const { return dual(bang(dual(a))); }

  // Nonlinear part S: fixed points of !, cartesian with product = tensor.
  std::vector<Elem> nonlinear_objects() const;
  bool is_nonlinear(Elem a) const { return bang(a) == a; }
  Elem M(Elem a) const { return bang(a); }
  Elem L(Elem s) const { return s; }

  // Fold of tensor over a list; the empty fold is the unit.
  template <class It>
  Elem tensor_fold(It first, It last) const {
    Elem acc = unit();
    bool started = false;
    for (; first != last; ++first) {
      acc = started ? tensor(acc, *first) : Elem(*first);
      started = true;
    }
    return acc;
  }

  friend bool operator==(const Lineale& a, const Lineale& b);

 private:
  explicit Lineale(LinealeTables t) : tables_(std::move(t)) {}
  LinealeTables tables_;
};

// The two-element boolean algebra: tensor = meet, dual = complement, ! = id.
Lineale boolean_lineale();

// Lukasiewicz chain {0, 1/2, 1}: tensor = max(0, a+b-1), dual = 1-a.
Lineale lukasiewicz_chain();

// Throws AxiomViolation for the first violated law.
void validate_lineale(const LinealeTables& t);
// Throws AxiomViolation if the tables are not square over the carrier.
void check_lineale_shapes(const LinealeTables& t);

// Reads a lineale from JSON text with fields elements, leq, tensor, unit,
// dual and optional bang.  Unknown fields are rejected.
Lineale load_finite_lineale(std::string_view json_text);
Lineale load_finite_lineale_file(const std::string& path);
LinealeTables parse_lineale_tables(std::string_view json_text);
std::string lineale_to_json(const Lineale& l);

}  // namespace dialectica
