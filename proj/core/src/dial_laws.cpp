#include "dialectica/dial_laws.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "dialectica/posetal_search.hpp"
#include "dialectica/structure.hpp"

namespace dialectica {

namespace {

void odometer_tables(std::size_t cells, std::size_t radix,
                     const std::function<void(const std::vector<Elem>&)>& visit) {
  std::vector<Elem> t(cells, Elem{0});
  while (true) {
    visit(t);
    std::size_t k = cells;
    while (k > 0) {
      --k;
      if (++t[k].id < radix) break;
      t[k].id = 0;
      if (k == 0) return;
    }
    if (cells == 0) return;
  }
}

template <class Obj, class Make>
std::vector<Obj> enumerate_objects(const std::vector<Elem>& entries, std::size_t max_index, Make make) {
  std::vector<Obj> out;
  for (std::size_t nx = 0; nx <= max_index; ++nx) {
    for (std::size_t ny = 0; ny <= max_index; ++ny) {
      if (nx == 0 && ny == 0) continue;
      auto X = EffectiveSet::range(nx);
      auto Y = EffectiveSet::range(ny);
      odometer_tables(nx * ny, entries.size(), [&](const std::vector<Elem>& digits) {
        std::vector<Elem> t;
        t.reserve(digits.size());
        for (auto d : digits) t.push_back(entries[d.id]);
        out.push_back(make(X, Y, std::move(t)));
      });
    }
  }
  return out;
}

std::string label(const Lineale& r, const LObject& G) { return object_label(r, G); }

Value morphism_key(std::size_t src, std::size_t dst, const LMorphism& m) {
  return Value::tuple({Value::integer(static_cast<std::int64_t>(src)),
                       Value::integer(static_cast<std::int64_t>(dst)), m.f().to_value(),
                       m.g().to_value()});
}

// ---- entry terms for the shape-level monoidal audit ----

// A base whose objects are terms: entries of argument k at table position p
// are ("@", k, p), and the tensor builds ("*", a, b).
struct TermArrow {};

struct TermBase {
  using Object = Value;
  using Morphism = TermArrow;
  Value unit() const { return Value::symbol("I"); }
  Value tensor(const Value& a, const Value& b) const {
    return Value::tuple({Value::symbol("*"), a, b});
  }
};

using TermModel = Dialectica<TermBase>;
using TermObject = TermModel::Object;

TermObject term_object(const EffectiveSet& X, const EffectiveSet& Y, std::int64_t slot) {
  const std::size_t cols = Y.size();
  return TermObject(X, Y, [X, Y, slot, cols](const Value& x, const Value& y) {
    auto p = static_cast<std::int64_t>(*X.index_of(x) * cols + *Y.index_of(y));
    return Value::tuple({Value::symbol("@"), Value::integer(slot), Value::integer(p)});
  });
}

// Flattened postfix form of a term.
struct Instr {
  enum Op : std::uint8_t { Leaf, Tensor, Unit } op;
  std::uint8_t slot = 0;
  std::uint16_t pos = 0;
};
using Program = std::vector<Instr>;

void compile(const Value& t, Program& out) {
  if (t.is(Value::Kind::Symbol)) {
    out.push_back({Instr::Unit});
    return;
  }
  const auto& tag = t[0].name();
  if (tag == "@") {
    out.push_back({Instr::Leaf, static_cast<std::uint8_t>(t[1].as_integer()),
                   static_cast<std::uint16_t>(t[2].as_integer())});
    return;
  }
  compile(t[1], out);
  compile(t[2], out);
  out.push_back({Instr::Tensor});
}

Elem run(const Lineale& r, const Program& p, const std::vector<const std::vector<Elem>*>& args) {
  Elem stack[16];
  std::size_t sp = 0;
  for (const auto& in : p) {
    switch (in.op) {
      case Instr::Leaf: stack[sp++] = (*args[in.slot])[in.pos]; break;
      case Instr::Unit: stack[sp++] = r.unit(); break;
      case Instr::Tensor:
        --sp;
        stack[sp - 1] = r.tensor(stack[sp - 1], stack[sp]);
        break;
    }
  }
  return stack[0];
}

// The distinct (source entry, target entry) obligations of a structural map.
std::vector<std::pair<Program, Program>> obligations(const TermObject& src, const TermObject& dst,
                                                     const IndexMaps& m) {
  std::set<std::pair<Value, Value>> seen;
  for (std::size_t xi = 0; xi < src.wit().size(); ++xi) {
    const Value fx = m.f.at(xi);
    for (std::size_t vi = 0; vi < dst.cowit().size(); ++vi) {
      seen.emplace(src(src.wit()[xi], m.g.at(vi)), dst(fx, dst.cowit()[vi]));
    }
  }
  std::vector<std::pair<Program, Program>> out;
  for (const auto& [a, b] : seen) {
    Program pa, pb;
    compile(a, pa);
    compile(b, pb);
    out.emplace_back(std::move(pa), std::move(pb));
  }
  return out;
}

bool inverse_pair(const TermObject& a, const TermObject& b, const IndexMaps& fwd, const IndexMaps& bwd) {
  return fwd.f.then(bwd.f) == FiniteFunction::identity(a.wit()) &&
         bwd.g.then(fwd.g) == FiniteFunction::identity(a.cowit()) &&
         bwd.f.then(fwd.f) == FiniteFunction::identity(b.wit()) &&
         fwd.g.then(bwd.g) == FiniteFunction::identity(b.cowit());
}

struct ShapeGroup {
  EffectiveSet X;
  EffectiveSet Y;
  std::vector<const LObject*> members;
};

std::vector<ShapeGroup> group_by_shape(const std::vector<LObject>& objects) {
  std::vector<ShapeGroup> groups;
  for (const auto& G : objects) {
    bool placed = false;
    for (auto& grp : groups) {
      if (grp.X == G.wit() && grp.Y == G.cowit()) {
        grp.members.push_back(&G);
        placed = true;
        break;
      }
    }
    if (!placed) groups.push_back({G.wit(), G.cowit(), {&G}});
  }
  return groups;
}

bool typed_at(const Lineale& r, const std::vector<std::pair<Program, Program>>& obl,
              const std::vector<const std::vector<Elem>*>& args) {
  for (const auto& [a, b] : obl) {
    if (!r.leq(run(r, a, args), run(r, b, args))) return false;
  }
  return true;
}

}  // namespace

std::vector<LObject> small_objects(const LinearModel& model, std::size_t max_index) {
  return enumerate_objects<LObject>(model.base().objects(), max_index,
                                    [&](const EffectiveSet& X, const EffectiveSet& Y,
                                        std::vector<Elem> t) { return model.tabulated(X, Y, std::move(t)); });
}

std::vector<IObject> small_intuitionistic_objects(const DialecticaPair& d, std::size_t max_index) {
  return enumerate_objects<IObject>(
      d.intuitionistic.base().objects(), max_index,
      [&](const EffectiveSet& X, const EffectiveSet& Y, std::vector<Elem> t) {
        return d.intuitionistic.tabulated(X, Y, std::move(t));
      });
}

std::string object_label(const Lineale& r, const LObject& G) {
  std::string s = std::to_string(G.wit().size()) + "x" + std::to_string(G.cowit().size()) + "[";
  const auto& t = G.table();
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + r.name(t[i]);
  return s + "]";
}

LawReport category_audit(const LinearModel& model, const std::vector<LObject>& objects,
                         CategoryAuditStats* stats) {
  const Lineale& r = model.base();
  const std::size_t n = objects.size();
  LawTally typed("hom-set members are well-typed");
  LawTally closed("composites stay in the hom-set");
  LawTally left_id("identity after m is m");
  LawTally right_id("m after identity is m");
  LawTally assoc("composition is associative");

  std::vector<LMorphism> all;
  std::vector<std::size_t> src_of, dst_of, pos_in, pos_out;
  std::vector<std::vector<std::size_t>> in(n), out(n);
  std::unordered_map<Value, std::size_t, ValueHash> index;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      model.for_each_hom(objects[a], objects[b], [&](LMorphism m) {
        typed.check(model.well_typed(m), {label(r, objects[a]), label(r, objects[b])});
        const std::size_t id = all.size();
        index.emplace(morphism_key(a, b, m), id);
        src_of.push_back(a);
        dst_of.push_back(b);
        pos_out.push_back(out[a].size());
        pos_in.push_back(in[b].size());
        out[a].push_back(id);
        in[b].push_back(id);
        all.push_back(std::move(m));
        return true;
      });
    }
  }

  auto lookup = [&](std::size_t a, std::size_t b, const LMorphism& m) -> std::size_t {
    auto it = index.find(morphism_key(a, b, m));
    return it == index.end() ? SIZE_MAX : it->second;
  };

  // comp[b][i * |in b| + j] = out[b][i] after in[b][j].
  std::vector<std::vector<std::size_t>> comp(n);
  std::uint64_t pairs = 0;
  for (std::size_t b = 0; b < n; ++b) {
    comp[b].assign(out[b].size() * in[b].size(), SIZE_MAX);
    for (std::size_t i = 0; i < out[b].size(); ++i) {
      for (std::size_t j = 0; j < in[b].size(); ++j) {
        const auto& g = all[out[b][i]];
        const auto& f = all[in[b][j]];
        auto gf = model.compose(g, f);
        ++pairs;
        const std::size_t id = lookup(src_of[in[b][j]], dst_of[out[b][i]], gf);
        closed.check(id != SIZE_MAX && model.well_typed(gf),
                     {label(r, objects[src_of[in[b][j]]]), label(r, objects[b]),
                      label(r, objects[dst_of[out[b][i]]])});
        comp[b][i * in[b].size() + j] = id;
      }
    }
  }
  auto composite = [&](std::size_t g, std::size_t f) {
    const std::size_t b = dst_of[f];
    return comp[b][pos_out[g] * in[b].size() + pos_in[f]];
  };

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t id = lookup(a, a, model.identity(objects[a]));
    for (std::size_t f : out[a]) {
      right_id.check(id != SIZE_MAX && composite(f, id) == f, {label(r, objects[a])});
    }
    for (std::size_t f : in[a]) {
      left_id.check(id != SIZE_MAX && composite(id, f) == f, {label(r, objects[a])});
    }
  }

  std::uint64_t triples = 0;
  for (std::size_t f = 0; f < all.size(); ++f) {
    for (std::size_t g : out[dst_of[f]]) {
      const std::size_t gf = composite(g, f);
      for (std::size_t h : out[dst_of[g]]) {
        ++triples;
        const std::size_t hg = composite(h, g);
        const bool ok = gf != SIZE_MAX && hg != SIZE_MAX && composite(hg, f) == composite(h, gf);
        if (!ok) {
          assoc.check(false, {label(r, objects[src_of[f]]), label(r, objects[dst_of[f]]),
                              label(r, objects[dst_of[g]]), label(r, objects[dst_of[h]])});
        }
      }
    }
  }
  LawResult assoc_result = assoc.result();
  assoc_result.checked = triples;

  if (stats) *stats = {n, all.size(), pairs, triples};
  return LawReport{{typed.result(), closed.result(), left_id.result(), right_id.result(), assoc_result}};
}

LawReport monoidal_audit(const LinearModel& model, const std::vector<LObject>& objects) {
  const Lineale& r = model.base();
  const TermModel terms{TermBase{}, model.limits()};
  const auto groups = group_by_shape(objects);
  LawTally assoc_typed("associator is a morphism");
  LawTally assoc_inv_typed("associator inverse is a morphism");
  LawTally assoc_iso("associator and its inverse compose to identities");
  LawTally lunit_typed("left unitor and inverse are morphisms");
  LawTally lunit_iso("left unitor and its inverse compose to identities");
  LawTally runit_typed("right unitor and inverse are morphisms");
  LawTally runit_iso("right unitor and its inverse compose to identities");
  LawTally sym_typed("symmetry is a morphism");
  LawTally sym_iso("symmetry is its own inverse");

  auto table = [](const LObject* G) { return &G->table(); };
  const auto I = terms.one();

  for (const auto& ga : groups) {
    auto A = term_object(ga.X, ga.Y, 0);
    {
      auto lhs = terms.tensor(I, A);
      auto fwd = maps::left_unitor(A, lhs);
      auto bwd = maps::left_unitor_inverse(A, lhs);
      lunit_iso.check(inverse_pair(lhs, A, fwd, bwd), {"shape " + std::to_string(ga.X.size()) + "x" +
                                                           std::to_string(ga.Y.size())});
      auto o1 = obligations(lhs, A, fwd);
      auto o2 = obligations(A, lhs, bwd);
      for (const auto* G : ga.members) {
        std::vector<const std::vector<Elem>*> args{table(G)};
        lunit_typed.check(typed_at(r, o1, args) && typed_at(r, o2, args), {label(r, *G)});
      }
      auto rhs = terms.tensor(A, I);
      auto rf = maps::right_unitor(A, rhs);
      auto rb = maps::right_unitor_inverse(A, rhs);
      runit_iso.check(inverse_pair(rhs, A, rf, rb), {"shape " + std::to_string(ga.X.size()) + "x" +
                                                         std::to_string(ga.Y.size())});
      auto o3 = obligations(rhs, A, rf);
      auto o4 = obligations(A, rhs, rb);
      for (const auto* G : ga.members) {
        std::vector<const std::vector<Elem>*> args{table(G)};
        runit_typed.check(typed_at(r, o3, args) && typed_at(r, o4, args), {label(r, *G)});
      }
    }
    for (const auto& gb : groups) {
      auto Bt = term_object(gb.X, gb.Y, 1);
      {
        auto lhs = terms.tensor(A, Bt);
        auto rhs = terms.tensor(Bt, A);
        auto s = maps::symmetry(lhs, rhs);
        auto s_back = maps::symmetry(rhs, lhs);
        sym_iso.check(inverse_pair(lhs, rhs, s, s_back), {"shapes"});
        auto o = obligations(lhs, rhs, s);
        for (const auto* G : ga.members) {
          for (const auto* H : gb.members) {
            sym_typed.check(typed_at(r, o, {table(G), table(H)}), {label(r, *G), label(r, *H)});
          }
        }
      }
      for (const auto& gc : groups) {
        auto C = term_object(gc.X, gc.Y, 2);
        auto lhs = terms.tensor(terms.tensor(A, Bt), C);
        auto rhs = terms.tensor(A, terms.tensor(Bt, C));
        auto fwd = maps::associator(A, Bt, C, lhs, rhs);
        auto bwd = maps::associator_inverse(A, Bt, C, rhs, lhs);
        assoc_iso.check(inverse_pair(lhs, rhs, fwd, bwd), {"shapes"});
        auto o1 = obligations(lhs, rhs, fwd);
        auto o2 = obligations(rhs, lhs, bwd);
        for (const auto* G : ga.members) {
          for (const auto* H : gb.members) {
            for (const auto* K : gc.members) {
              std::vector<const std::vector<Elem>*> args{table(G), table(H), table(K)};
              assoc_typed.check(typed_at(r, o1, args), {label(r, *G), label(r, *H), label(r, *K)});
              assoc_inv_typed.check(typed_at(r, o2, args), {label(r, *G), label(r, *H), label(r, *K)});
            }
          }
        }
      }
    }
  }
  return LawReport{{assoc_typed.result(), assoc_inv_typed.result(), assoc_iso.result(),
                    lunit_typed.result(), lunit_iso.result(), runit_typed.result(),
                    runit_iso.result(), sym_typed.result(), sym_iso.result()}};
}

LawReport star_autonomy_audit(const LinearModel& model, const std::vector<LObject>& objects) {
  const Lineale& r = model.base();
  LawTally curry_typed("curry lands in hom(A, B -o C)");
  LawTally round_trip("uncurry after curry is the identity");
  LawTally onto("|hom(A (x) B, C)| = |hom(A, B -o C)| with curry injective");
  LawTally dual_objects("dual is involutive on objects");
  LawTally dual_morphisms("dual is involutive on morphisms");

  for (const auto& A : objects) {
    dual_objects.check(model.dual(model.dual(A)) == A, {label(r, A)});
    for (const auto& B : objects) {
      model.for_each_hom(A, B, [&](LMorphism m) {
        auto dd = model.dual(model.dual(m));
        dual_morphisms.check(dd.f() == m.f() && dd.g() == m.g() && dd.src() == m.src() &&
                                 dd.dst() == m.dst(),
                             {label(r, A), label(r, B)});
        return true;
      });
    }
  }

  // Curry only rearranges tables, so it is computed once per table pair and
  // shape triple; typedness is then an entrywise check on each object triple.
  struct Curried {
    std::vector<std::uint32_t> f;  // indices into wit(B -o C)
    std::vector<std::uint32_t> g;  // indices into cowit(A)
    bool round_trips = false;
  };
  auto indices = [](const FiniteFunction& fn, std::vector<std::uint32_t>& out) {
    for (const auto& v : fn.table()) out.push_back(static_cast<std::uint32_t>(*fn.codomain().index_of(v)));
  };
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  const auto groups = group_by_shape(objects);
  for (const auto& ga : groups) {
    for (const auto& gb : groups) {
      for (const auto& gc : groups) {
        std::unordered_map<std::vector<std::uint32_t>, Curried, KeyHash> memo;
        for (const auto* A : ga.members) {
          for (const auto* B : gb.members) {
            const auto AB = model.tensor(*A, *B);
            for (const auto* C : gc.members) {
              const auto T = model.lollipop(*B, *C);
              const auto& ttab = T.table();
              const auto& atab = A->table();
              const std::size_t tcols = T.cowit().size();
              const std::size_t acols = A->cowit().size();
              std::size_t n = 0;
              bool typed = true;
              bool round = true;
              std::unordered_map<std::vector<std::uint32_t>, char, KeyHash> images;
              model.for_each_hom(AB, *C, [&](const LMorphism& m) {
                ++n;
                std::vector<std::uint32_t> key;
                indices(m.f(), key);
                indices(m.g(), key);
                auto it = memo.find(key);
                if (it == memo.end()) {
                  auto t = maps::curry(*A, *B, *C, T, m.f(), m.g());
                  auto back = maps::uncurry(*A, *B, *C, AB, t.f, t.g);
                  Curried c;
                  indices(t.f, c.f);
                  indices(t.g, c.g);
                  c.round_trips = back.f == m.f() && back.g == m.g();
                  it = memo.emplace(std::move(key), std::move(c)).first;
                }
                const Curried& c = it->second;
                round = round && c.round_trips;
                for (std::size_t x = 0; x < c.f.size() && typed; ++x) {
                  for (std::size_t j = 0; j < tcols; ++j) {
                    if (!r.leq(atab[x * acols + c.g[j]], ttab[c.f[x] * tcols + j])) {
                      typed = false;
                      break;
                    }
                  }
                }
                std::vector<std::uint32_t> image = c.f;
                image.insert(image.end(), c.g.begin(), c.g.end());
                images.emplace(std::move(image), 0);
                return true;
              });
              const std::vector<std::string> w{label(r, *A), label(r, *B), label(r, *C)};
              curry_typed.check(typed, w);
              round_trip.check(round, w);
              onto.check(images.size() == n && hom_count(model, *A, T) == n, w);
            }
          }
        }
      }
    }
  }
  return LawReport{{curry_typed.result(), round_trip.result(), onto.result(), dual_objects.result(),
                    dual_morphisms.result()}};
}

LawReport products_audit(const LinearModel& model, const std::vector<LObject>& objects) {
  const Lineale& r = model.base();
  LawTally product_count("|hom(C, A & B)| = |hom(C, A)| |hom(C, B)|");
  LawTally product_unique("pairing the projections of k gives k");
  LawTally coproduct_count("|hom(A + B, C)| = |hom(A, C)| |hom(B, C)|");
  LawTally coproduct_unique("copairing the injections of k gives k");
  LawTally terminal("hom(C, top) has one element");
  LawTally initial("hom(0, C) has one element");

  auto count = [&](const LObject& a, const LObject& b) {
    std::size_t k = 0;
    model.for_each_hom(a, b, [&](const LMorphism&) {
      ++k;
      return true;
    });
    return k;
  };

  std::vector<std::vector<std::size_t>> homs(objects.size(), std::vector<std::size_t>(objects.size()));
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j) homs[i][j] = count(objects[i], objects[j]);

  for (std::size_t c = 0; c < objects.size(); ++c) {
    const auto& C = objects[c];
    terminal.check(count(C, model.top()) == 1, {label(r, C)});
    initial.check(count(model.zero(), C) == 1, {label(r, C)});
  }

  for (std::size_t a = 0; a < objects.size(); ++a) {
    for (std::size_t b = 0; b < objects.size(); ++b) {
      const auto& A = objects[a];
      const auto& B = objects[b];
      const auto AB = model.with_(A, B);
      const auto AplusB = model.plus(A, B);
      const auto p1 = project(model, A, B, false);
      const auto p2 = project(model, A, B, true);
      const auto i1 = inject(model, A, B, false);
      const auto i2 = inject(model, A, B, true);
      for (std::size_t c = 0; c < objects.size(); ++c) {
        const auto& C = objects[c];
        const std::vector<std::string> w{label(r, A), label(r, B), label(r, C)};
        std::size_t n = 0;
        bool unique = true;
        model.for_each_hom(C, AB, [&](LMorphism k) {
          ++n;
          auto back = pairing(model, model.compose(p1, k), model.compose(p2, k));
          unique = unique && back.f() == k.f() && back.g() == k.g();
          return true;
        });
        product_count.check(n == homs[c][a] * homs[c][b], w);
        product_unique.check(unique, w);
        n = 0;
        unique = true;
        model.for_each_hom(AplusB, C, [&](LMorphism k) {
          ++n;
          auto back = copairing(model, model.compose(k, i1), model.compose(k, i2));
          unique = unique && back.f() == k.f() && back.g() == k.g();
          return true;
        });
        coproduct_count.check(n == homs[a][c] * homs[b][c], w);
        coproduct_unique.check(unique, w);
      }
    }
  }
  return LawReport{{product_count.result(), product_unique.result(), coproduct_count.result(),
                    coproduct_unique.result(), terminal.result(), initial.result()}};
}

LawReport adjunction_audit(const DialecticaPair& d, const std::vector<IObject>& iobjects,
                           const std::vector<LObject>& lobjects,
                           const std::vector<IObject>& natural_iobjects,
                           const std::vector<LObject>& natural_lobjects) {
  const Lineale& r = d.lineale();
  LawTally bijection("adjuncts are mutually inverse bijections");
  LawTally natural("adjunct is natural in both variables");
  for (const auto& K : iobjects) {
    for (const auto& H : lobjects) {
      auto rep = adjunction_witness(d, K, H);
      bijection.check(rep.ok(), {"K " + std::to_string(K.wit().size()) + "x" +
                                     std::to_string(K.cowit().size()),
                                 label(r, H)});
    }
  }
  const auto& di = d.intuitionistic;
  const auto& dl = d.linear;
  for (const auto& K2 : natural_iobjects) {
    for (const auto& K : natural_iobjects) {
      auto as = di.hom(K2, K);
      if (as.empty()) continue;
      const auto LK = lift_linearisation(d, K);
      for (const auto& H : natural_lobjects) {
        auto ms = dl.hom(LK, H);
        if (ms.empty()) continue;
        for (const auto& H2 : natural_lobjects) {
          auto bs = dl.hom(H, H2);
          for (const auto& a : as)
            for (const auto& m : ms)
              for (const auto& b : bs)
                natural.check(adjunction_natural(d, a, m, b), {label(r, H), label(r, H2)});
        }
      }
    }
  }
  return LawReport{{bijection.result(), natural.result()}};
}

LawReport functor_audit(const DialecticaPair& d, const std::vector<IObject>& iobjects,
                        const std::vector<LObject>& lobjects) {
  const Lineale& r = d.lineale();
  const auto& di = d.intuitionistic;
  const auto& dl = d.linear;
  LawTally m_id("D_f(M) preserves identities");
  LawTally m_comp("D_f(M) preserves composition");
  LawTally l_id("D_dn(L) preserves identities");
  LawTally l_comp("D_dn(L) preserves composition");
  for (const auto& A : lobjects) {
    const auto lifted = lift_multiplication(d, dl.identity(A));
    m_id.check(lifted == di.identity(lift_multiplication(d, A)), {label(r, A)});
    for (const auto& B : lobjects) {
      auto fs = dl.hom(A, B);
      if (fs.empty()) continue;
      for (const auto& C : lobjects) {
        for (const auto& g : dl.hom(B, C)) {
          for (const auto& f : fs) {
            auto lhs = lift_multiplication(d, dl.compose(g, f));
            auto rhs = di.compose(lift_multiplication(d, g), lift_multiplication(d, f));
            m_comp.check(lhs == rhs, {label(r, A), label(r, B), label(r, C)});
          }
        }
      }
    }
  }
  auto ilabel = [](const IObject& K) {
    return std::to_string(K.wit().size()) + "x" + std::to_string(K.cowit().size());
  };
  for (const auto& K : iobjects) {
    const auto lifted = lift_linearisation(d, di.identity(K));
    const auto id = dl.identity(lift_linearisation(d, K));
    l_id.check(lifted.f() == id.f() && lifted.g() == id.g(), {ilabel(K)});
    for (const auto& K2 : iobjects) {
      auto fs = di.hom(K, K2);
      if (fs.empty()) continue;
      for (const auto& K3 : iobjects) {
        for (const auto& g : di.hom(K2, K3)) {
          for (const auto& f : fs) {
            auto lhs = lift_linearisation(d, di.compose(g, f));
            auto rhs = dl.compose(lift_linearisation(d, g), lift_linearisation(d, f));
            l_comp.check(lhs.f() == rhs.f() && lhs.g() == rhs.g(), {ilabel(K), ilabel(K2), ilabel(K3)});
          }
        }
      }
    }
  }
  return LawReport{{m_id.result(), m_comp.result(), l_id.result(), l_comp.result()}};
}

}  // namespace dialectica
