// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dialectica/dial_laws.hpp"
#include "dialectica/errors.hpp"
#include "dialectica/instances.hpp"
#include "dialectica/logic.hpp"
#include "dialectica/monadic.hpp"
#include "oracles.hpp"
#include "simadd_rules.hpp"

using namespace dialectica;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome audits() {
  DialecticaPair d(boolean_lineale());
  auto objs = small_objects(d.linear, 2);
  auto io2 = small_intuitionistic_objects(d, 2);
  auto io1 = small_intuitionistic_objects(d, 1);
  auto lo1 = small_objects(d.linear, 1);
  CategoryAuditStats stats;
  std::vector<std::pair<const char*, LawReport>> suites;
  suites.emplace_back("category", category_audit(d.linear, objs, &stats));
  suites.emplace_back("monoidal", monoidal_audit(d.linear, objs));
  suites.emplace_back("star-autonomy", star_autonomy_audit(d.linear, objs));
  suites.emplace_back("products", products_audit(d.linear, objs));
  suites.emplace_back("adjunction", adjunction_audit(d, io2, objs, io1, lo1));
  suites.emplace_back("functor", functor_audit(d, io1, lo1));
  // Naturality at index size 2: a seeded sample of squares.
  std::mt19937_64 rng(20261015);
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  std::size_t squares = 0, unnatural = 0, attempts = 0;
  while (squares < 2000 && attempts < 200000) {
    ++attempts;
    const auto& K = pick(io2);
    auto as = d.intuitionistic.hom(pick(io2), K);
    const auto& H = pick(objs);
    auto ms = d.linear.hom(lift_linearisation(d, K), H);
    auto bs = d.linear.hom(H, pick(objs));
    if (as.empty() || ms.empty() || bs.empty()) continue;
    ++squares;
    unnatural += !adjunction_natural(d, pick(as), pick(ms), pick(bs));
  }
  Outcome out{unnatural == 0, ""};
  std::ostringstream os;
  os << objs.size() << " objects, " << stats.morphisms << " morphisms, " << stats.composable_triples
     << " composable triples, " << squares << " sampled naturality squares (" << unnatural << " failing);";
  for (const auto& [name, rep] : suites) {
    os << " " << name << (rep.all_passed() ? " ok" : " FAILED");
    if (!rep.all_passed()) {
      out.pass = false;
      std::fprintf(stderr, "%s", rep.to_text().c_str());
    }
  }
  out.detail = os.str();
  return out;
}

Outcome figure_one() {
  std::uint64_t checks = 0, bad = 0;
  auto expect = [&](std::uint64_t got, std::uint64_t want) {
    ++checks;
    bad += got != want;
  };
  for (std::size_t bound : {1, 2, 3}) {
    Limits lim;
    lim.multiset_bound = bound;
    LinearModel M(boolean_lineale(), lim);
    auto objs = small_objects(M, 2);
    for (const auto& G : objs) {
      const std::uint64_t x = G.wit().size(), y = G.cowit().size();
      expect(M.dual(G).wit().size(), y);
      expect(M.dual(G).cowit().size(), x);
      expect(M.bang(G).wit().size(), x);
      expect(M.bang(G).cowit().size(), oracle::ipow(oracle::multisets_upto(y, bound), x));
      expect(M.whynot(G).wit().size(), oracle::ipow(oracle::multisets_upto(x, bound), y));
      expect(M.whynot(G).cowit().size(), y);
      if (bound != 2) continue;
      for (const auto& H : objs) {
        const std::uint64_t u = H.wit().size(), v = H.cowit().size();
        auto T = M.tensor(G, H);
        expect(T.wit().size(), x * u);
        expect(T.cowit().size(), oracle::ipow(y, u) * oracle::ipow(v, x));
        auto P = M.par(G, H);
        expect(P.wit().size(), oracle::ipow(x, v) * oracle::ipow(u, y));
        expect(P.cowit().size(), y * v);
        auto W = M.with_(G, H);
        expect(W.wit().size(), x * u);
        expect(W.cowit().size(), y + v);
        auto S = M.plus(G, H);
        expect(S.wit().size(), x + u);
        expect(S.cowit().size(), y * v);
        auto L = M.lollipop(G, H);
        expect(L.wit().size(), oracle::ipow(u, x) * oracle::ipow(y, v));
        expect(L.cowit().size(), x * v);
      }
    }
    expect(M.one().wit().size() * M.one().cowit().size(), 1);
    expect(M.bot().wit().size() * M.bot().cowit().size(), 1);
    expect(M.top().wit().size() + 10 * M.top().cowit().size(), 1);
    expect(M.zero().wit().size() + 10 * M.zero().cowit().size(), 10);
  }
  return {bad == 0, std::to_string(checks) + " cardinalities, " + std::to_string(bad) + " mismatches"};
}

Outcome relative_completeness_check() {
  LinearModel D(boolean_lineale());
  std::vector<FormulaPtr> leaves{Formula::atom("p"), Formula::atom("q"), Formula::one(), Formula::bot()};
  auto upto2 = generate_mell(leaves, 2);
  std::vector<FormulaPtr> exact2;
  for (const auto& f : upto2) {
    if (depth(*f) == 2) exact2.push_back(f);
  }
  std::vector<Valuation> vals;
  for (std::uint32_t p = 0; p < 2; ++p) {
    for (std::uint32_t q = 0; q < 2; ++q) vals.push_back({{"p", Elem{p}}, {"q", Elem{q}}});
  }
  std::uint64_t checked = 0, bad = 0, skipped = 0, valid = 0;
  auto check = [&](const FormulaPtr& f) {
    for (const auto& v : vals) {
      try {
        auto w = completeness_witnesses(D, *f, v);
        auto rc = relative_completeness(D, *f, v);
        ++checked;
        valid += rc.validity.valid;
        if (!w.typed() || !rc.consistent() || (rc.validity.valid && !rc.base_valid)) {
          ++bad;
          std::fprintf(stderr, "completeness failure: %s\n", f->to_string().c_str());
        }
      } catch (const BudgetExceeded&) {
        ++skipped;
      }
    }
  };
  for (const auto& f : upto2) check(f);
  const std::uint64_t exhaustive = checked;

  // Depth 3: a seeded sample, each formula a connective over depth-2 children.
  std::mt19937_64 rng(20261015);
  auto pick = [&](const std::vector<FormulaPtr>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  constexpr int kSamples = 20000;
  for (int i = 0; i < kSamples; ++i) {
    const int op = std::uniform_int_distribution<int>(0, 5)(rng);
    auto a = pick(exact2);
    auto b = pick(upto2);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) std::swap(a, b);
    FormulaPtr f;
    switch (op) {
      case 0: f = Formula::dual(pick(exact2)); break;
      case 1: f = Formula::bang(pick(exact2)); break;
      case 2: f = Formula::whynot(pick(exact2)); break;
      case 3: f = Formula::tensor(a, b); break;
      case 4: f = Formula::par(a, b); break;
      default: f = Formula::lollipop(a, b); break;
    }
    check(f);
  }
  std::ostringstream os;
  os << upto2.size() << " formulas of depth <= 2 (" << exhaustive << " checks) + " << kSamples
     << " sampled of depth 3 (" << checked - exhaustive << " checks); " << valid << " valid, " << bad
     << " failures, " << skipped << " over budget";
  return {bad == 0, os.str()};
}

Outcome first_law() {
  LinearModel D(boolean_lineale());
  auto objs = small_objects(D, 2);
  std::size_t ok = 0;
  for (const auto& G : objs) ok += first_monad_law_check(D, G).round_trips;
  return {ok == objs.size(), std::to_string(ok) + "/" + std::to_string(objs.size()) + " objects with inverse pairs"};
}

Outcome second_law() {
  LinearModel D(boolean_lineale());
  auto r = second_monad_law_check(D, second_law_instance(D));
  std::ostringstream os;
  os << D.describe(r.via_inner_mu) << " vs " << D.describe(r.via_outer_mu) << "; hom forward "
     << (r.hom_forward ? "nonempty" : "empty") << ", backward " << (r.hom_backward ? "nonempty" : "empty")
     << "; transformation " << (r.witness_transformation_typed && r.cowitness_transformation_typed ? "typed" : "ill-typed");
  return {!r.hom_forward && !r.hom_backward && r.witness_transformation_typed && r.cowitness_transformation_typed,
          os.str()};
}

Outcome bang_mu() {
  LinearModel D(boolean_lineale());
  auto r = bang_mu_incompatibility(D, bang_mu_instance(D));
  auto c = bang_mu_incompatibility(D, bang_mu_control(D));
  bool control_iso = false;
  if (auto to = find_hom(D, c.bang_of_mu, c.mu_of_bang)) control_iso = find_inverse(D, *to).has_value();
  std::ostringstream os;
  os << D.describe(r.bang_of_mu) << " vs " << D.describe(r.mu_of_bang) << "; hom forward "
     << (r.hom_forward ? "nonempty" : "empty") << ", backward " << (r.hom_backward ? "nonempty" : "empty")
     << "; control " << (control_iso ? "isomorphic" : "not isomorphic");
  return {!r.hom_forward && !r.hom_backward && control_iso, os.str()};
}

Outcome bot_tensor_top() {
  LinearModel D(boolean_lineale());
  auto b = bot_tensor_top_iso(D);
  auto f = parse_formula("bot * top");
  const bool valid = is_valid(D, *f, {}).valid;
  const auto& r = D.base();
  const bool base_valid = r.leq(r.unit(), interpret_base(r, *f, {}));
  std::ostringstream os;
  os << "valid in the dialectica model: " << (valid ? "yes" : "no") << ", iso to top: " << (b.inverse ? "yes" : "no")
     << ", valid in the base: " << (base_valid ? "yes" : "no");
  return {valid && b.inverse && !base_valid, os.str()};
}

Outcome simadd() {
  LinearModel D(boolean_lineale());
  auto probes = small_objects(D, 1);
  std::size_t degenerate = 0, degenerate_ok = 0;
  for (unsigned mask = 0; mask < 4; ++mask) {
    for (int plus = 0; plus < 2; ++plus) {
      auto P = plus ? rules::family(D, mask, 2, 1) : rules::family(D, mask, 1, 2);
      auto [to, from] = simadd_degenerate_iso(D, P);
      const auto& Q = to.dst();
      const auto& M = to.src();
      auto e0 = P(Value::integer(0), Value::integer(0));
      auto e1 = plus ? P(Value::integer(1), Value::integer(0)) : P(Value::integer(0), Value::integer(1));
      bool ok = Q == (plus ? D.plus(e0, e1) : D.with_(e0, e1)) && D.compose(from, to) == D.identity(M) &&
                D.compose(to, from) == D.identity(Q);
      for (const auto& G : probes) {
        ok = ok && hom_count(D, G, M) == hom_count(D, G, Q) && hom_count(D, M, G) == hom_count(D, Q, G);
      }
      ++degenerate;
      degenerate_ok += ok;
    }
  }
  std::size_t rules_ok = 0;
  for (int m = 1; m <= 2; ++m) {
    for (int n = 1; n <= 2; ++n) rules_ok += D.well_typed(simadd_rule_check(D, rules::instance(D, m, n)));
  }
  std::size_t pairs = 0, choice = 0, distribution = 0;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      auto A = rules::family(D, a, 2, 2);
      auto B = rules::family(D, b, 2, 2);
      ++pairs;
      choice += parallel_choice_tensor(D, A, B).found();
      distribution += plus_distribution(D, A, B).found();
    }
  }
  std::ostringstream os;
  os << degenerate_ok << "/" << degenerate << " degenerate reductions, " << rules_ok << "/4 rule instances, "
     << "parallel choice " << choice << "/" << pairs << ", plus distribution " << distribution << "/" << pairs;
  return {degenerate_ok == degenerate && rules_ok == 4 && choice == pairs && distribution == pairs, os.str()};
}

Outcome substrate() {
  std::uint64_t checks = 0, bad = 0;
  auto expect = [&](bool ok) {
    ++checks;
    bad += !ok;
  };
  constexpr std::size_t kBound = 3;
  for (std::size_t na = 0; na <= 2; ++na) {
    auto A = EffectiveSet::range(na);
    auto MA = multiset_space(A, kBound);
    for (std::size_t nb = 0; nb <= 2; ++nb) {
      auto B = EffectiveSet::range(nb);
      auto KB = function_space(A, multiset_space(B, kBound));
      for (const auto& a : A) {
        for (const auto& k : KB) {
          expect(multiset_bind(multiset_singleton(a), [&](const Value& x) { return k.apply(x); }) == k.apply(a));
        }
      }
      for (std::size_t nc = 0; nc <= 2; ++nc) {
        auto HC = function_space(B, multiset_space(EffectiveSet::range(nc), kBound));
        for (const auto& m : MA) {
          for (const auto& k : KB) {
            auto K = [&](const Value& x) { return k.apply(x); };
            for (const auto& h : HC) {
              auto H = [&](const Value& x) { return h.apply(x); };
              expect(multiset_bind(multiset_bind(m, K), H) ==
                     multiset_bind(m, [&](const Value& x) { return multiset_bind(K(x), H); }));
            }
          }
        }
      }
    }
    for (const auto& m : MA) expect(multiset_bind(m, multiset_singleton) == m);
  }
  for (std::size_t ny = 0; ny <= 2; ++ny) {
    for (std::size_t nv = 0; nv <= 2; ++nv) {
      auto Y = EffectiveSet::range(ny), V = EffectiveSet::range(nv);
      for (const auto& p : product(multiset_space(Y, 2), multiset_space(V, 2))) {
        expect(multiset_coproduct_iso_inverse(multiset_coproduct_iso(p)) == p);
      }
      for (const auto& m : multiset_space(coproduct(Y, V), 2)) {
        expect(multiset_coproduct_iso(multiset_coproduct_iso_inverse(m)) == m);
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " equations, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"soundness audits over objects of index size <= 2", audits},
      {"connective cardinalities", figure_one},
      {"relative completeness for MELL", relative_completeness_check},
      {"first monad law", first_law},
      {"second monad law counterexample", second_law},
      {"! and mu incompatibility", bang_mu},
      {"bot (x) top", bot_tensor_top},
      {"simultaneous additives", simadd},
      {"multiset monad substrate", substrate},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::printf("%s criterion %zu: %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
