#include "dialectica/laws.hpp"

#include <algorithm>

#include "dialectica/errors.hpp"

namespace dialectica {

bool LawReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult* LawReport::find(const std::string& law) const {
  for (const auto& r : results) {
    if (r.law == law) return &r;
  }
  return nullptr;
}

std::string LawReport::to_text() const {
  std::string out;
  for (const auto& r : results) {
    if (r.passed) {
      out += "pass " + r.law + " (" + std::to_string(r.checked) + " checks)\n";
    } else {
      out += "FAIL " + r.law + " at (";
      for (std::size_t i = 0; i < r.counterexample.size(); ++i) {
        if (i) out += ", ";
        out += r.counterexample[i];
      }
      out += ")\n";
    }
  }
  return out;
}

bool LawTally::check(bool ok, const std::vector<std::string>& witness) {
  ++result_.checked;
  if (!ok && result_.passed) {
    result_.passed = false;
    result_.counterexample = witness;
  }
  return ok;
}

void check_lineale_shapes(const LinealeTables& t) {
  const std::size_t n = t.names.size();
  if (n == 0) throw AxiomViolation("nonempty carrier", {});
  auto bad_shape = [](const std::string& what) {
    throw AxiomViolation("table shape: " + what, {});
  };
  if (t.leq.size() != n) bad_shape("leq");
  for (const auto& row : t.leq) {
    if (row.size() != n) bad_shape("leq");
  }
  if (t.tensor.size() != n) bad_shape("tensor");
  for (const auto& row : t.tensor) {
    if (row.size() != n) bad_shape("tensor");
    for (auto c : row) {
      if (c >= n) bad_shape("tensor value");
    }
  }
  if (t.unit >= n) bad_shape("unit");
  if (t.dual.size() != n) bad_shape("dual");
  for (auto d : t.dual) {
    if (d >= n) bad_shape("dual value");
  }
  if (t.bang) {
    if (t.bang->size() != n) bad_shape("bang");
    for (auto b : *t.bang) {
      if (b >= n) bad_shape("bang value");
    }
  }
}

LawReport lineale_law_report(const LinealeTables& t) {
  check_lineale_shapes(t);
  const std::uint32_t n = static_cast<std::uint32_t>(t.names.size());
  const auto& le = t.leq;
  const auto& ten = t.tensor;
  const auto& du = t.dual;
  auto w = [&](std::initializer_list<std::uint32_t> ids) {
    std::vector<std::string> out;
    for (auto i : ids) out.push_back(t.names[i]);
    return out;
  };
  LawReport report;
  auto add = [&](const LawTally& tally) { report.results.push_back(tally.result()); };

  LawTally order("partial order");
  for (std::uint32_t a = 0; a < n; ++a) {
    order.check(le[a][a], w({a}));
    for (std::uint32_t b = 0; b < n; ++b) {
      order.check(a == b || !(le[a][b] && le[b][a]), w({a, b}));
      for (std::uint32_t c = 0; c < n; ++c) {
        order.check(!(le[a][b] && le[b][c]) || le[a][c], w({a, b, c}));
      }
    }
  }
  add(order);

  LawTally assoc("associativity");
  LawTally comm("commutativity");
  LawTally unit("unit");
  LawTally compat("order-compatibility");
  for (std::uint32_t a = 0; a < n; ++a) {
    unit.check(ten[t.unit][a] == a && ten[a][t.unit] == a, w({a}));
    for (std::uint32_t b = 0; b < n; ++b) {
      comm.check(ten[a][b] == ten[b][a], w({a, b}));
      for (std::uint32_t c = 0; c < n; ++c) {
        assoc.check(ten[a][ten[b][c]] == ten[ten[a][b]][c], w({a, b, c}));
        compat.check(!le[a][b] || le[ten[a][c]][ten[b][c]], w({a, b, c}));
      }
    }
  }
  add(assoc);
  add(comm);
  add(unit);
  add(compat);

  LawTally invol("dual involution");
  LawTally anti("dual antitone");
  LawTally star("*-autonomy bijection");
  for (std::uint32_t a = 0; a < n; ++a) {
    invol.check(du[du[a]] == a, w({a}));
    for (std::uint32_t b = 0; b < n; ++b) {
      anti.check(!le[a][b] || le[du[b]][du[a]], w({a, b}));
      for (std::uint32_t c = 0; c < n; ++c) {
        // hom(a (x) b, c^) is inhabited iff hom(a, (b (x) c)^) is.
        star.check(le[ten[a][b]][du[c]] == le[a][du[ten[b][c]]], w({a, b, c}));
      }
    }
  }
  add(invol);
  add(anti);
  add(star);

  if (!t.bang) return report;
  const auto& bg = *t.bang;
  std::vector<std::uint32_t> s;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (bg[a] == a) s.push_back(a);
  }

  LawTally comonad("comonad laws for !");
  for (std::uint32_t a = 0; a < n; ++a) {
    comonad.check(le[bg[a]][a], w({a}));
    comonad.check(bg[bg[a]] == bg[a], w({a}));
    for (std::uint32_t b = 0; b < n; ++b) {
      comonad.check(!le[a][b] || le[bg[a]][bg[b]], w({a, b}));
    }
  }
  add(comonad);

  LawTally cart("cartesian structure of S");
  for (auto a : s) {
    cart.check(le[a][t.unit], w({a}));
    for (auto b : s) {
      const auto m = ten[a][b];
      cart.check(bg[m] == m && le[m][a] && le[m][b], w({a, b}));
      for (auto c : s) cart.check(!(le[c][a] && le[c][b]) || le[c][m], w({a, b, c}));
    }
  }
  add(cart);

  LawTally mono("monoidality of L and M");
  mono.check(bg[t.unit] == t.unit, w({t.unit}));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      mono.check(le[ten[bg[a]][bg[b]]][bg[ten[a][b]]], w({a, b}));
    }
  }
  add(mono);

  LawTally adj("adjunction L -| M");
  for (auto x : s) {
    // unit x <= M L x and counit L M a <= a, plus the hom bijection.
    adj.check(le[x][bg[x]], w({x}));
    for (std::uint32_t a = 0; a < n; ++a) {
      adj.check(le[bg[a]][a], w({x, a}));
      adj.check(le[x][a] == le[x][bg[a]], w({x, a}));
    }
  }
  add(adj);
  return report;
}

void validate_lineale(const LinealeTables& t) {
  auto report = lineale_law_report(t);
  for (const auto& r : report.results) {
    if (!r.passed) throw AxiomViolation(r.law, r.counterexample);
  }
}

LawReport check_model_laws(const Lineale& m) {
  LawReport report;
  const auto objs = m.objects();
  auto nm = [&](Elem e) { return m.name(e); };

  LawTally cat("category laws");
  for (auto a : objs) {
    for (auto b : objs) {
      for (const auto& f : m.hom(a, b)) {
        cat.check(m.compose(f, m.identity(a)) == f && m.compose(m.identity(b), f) == f,
                  {nm(a), nm(b)});
        for (auto c : objs) {
          for (const auto& g : m.hom(b, c)) {
            for (auto d : objs) {
              for (const auto& h : m.hom(c, d)) {
                cat.check(m.compose(h, m.compose(g, f)) == m.compose(m.compose(h, g), f),
                          {nm(a), nm(b), nm(c), nm(d)});
              }
            }
          }
        }
      }
    }
  }
  report.results.push_back(cat.result());

  LawTally functor("tensor and dual functoriality");
  for (auto a : objs) {
    for (auto b : objs) {
      for (const auto& f : m.hom(a, b)) {
        const auto df = m.dual(f);
        functor.check(m.leq(df.src, df.dst), {nm(a), nm(b)});
        for (auto c : objs) {
          for (auto d : objs) {
            for (const auto& g : m.hom(c, d)) {
              const auto fg = m.tensor(f, g);
              functor.check(m.leq(fg.src, fg.dst), {nm(a), nm(b), nm(c), nm(d)});
            }
          }
        }
      }
    }
  }
  report.results.push_back(functor.result());

  auto tables = lineale_law_report(m.tables());
  for (auto& r : tables.results) report.results.push_back(std::move(r));

  if (m.has_products()) {
    LawTally prod("product and coproduct universal properties");
    for (auto a : objs) {
      for (auto b : objs) {
        const auto p = m.with_(a, b);
        const auto s = m.plus(a, b);
        for (auto c : objs) {
          prod.check((m.leq(c, a) && m.leq(c, b)) == m.leq(c, p), {nm(a), nm(b), nm(c)});
          prod.check((m.leq(a, c) && m.leq(b, c)) == m.leq(s, c), {nm(a), nm(b), nm(c)});
        }
      }
    }
    for (auto c : objs) {
      prod.check(m.leq(c, m.top()) && m.leq(m.zero(), c), {nm(c)});
    }
    report.results.push_back(prod.result());
  }
  return report;
}

}  // namespace dialectica
