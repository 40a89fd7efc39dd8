#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dialectica/dial_laws.hpp"
#include "dialectica/errors.hpp"
#include "dialectica/instances.hpp"
#include "dialectica/logic.hpp"
#include "dialectica/monadic.hpp"
#include "dialectica/posetal_search.hpp"

namespace {

using namespace dialectica;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;
constexpr std::size_t kMaxListed = 16;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> budget;
  std::size_t bound = 2;
  bool timing = false;
};

Limits limits_for(const Options& opt) {
  Limits lim;
  if (opt.budget) {
    lim.budget = *opt.budget;
  } else if (const char* env = std::getenv("DIALECTICA_BUDGET")) {
    try {
      lim.budget = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(std::string("DIALECTICA_BUDGET is not a number: ") + env);
    }
  }
  lim.multiset_bound = opt.bound;
  return lim;
}

LinealeTables model_tables(const std::string& source) {
  if (source == "bool") return boolean_lineale().tables();
  std::ifstream in(source);
  if (!in) throw Error("cannot open model config " + source);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lineale_tables(ss.str());
}

Lineale load_model(const std::string& source) {
  if (source == "bool") return boolean_lineale();
  return Lineale::from_tables(model_tables(source));
}

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    if (v.is_object() && v.empty()) {
      os << pad << it.key() << ": {}\n";
    } else if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render_text(os, v, indent + 1);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << pad << it.key() << ":\n";
      for (const auto& item : v) {
        os << pad << "  -\n";
        render_text(os, item, indent + 2);
      }
    } else if (v.is_array()) {
      os << pad << it.key() << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        os << (i ? ", " : "") << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      }
      os << "]\n";
    } else {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Options& opt, Json report) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(std::cout, report, 0);
  }
}

std::string shape(const LObject& G) {
  return std::to_string(G.wit().size()) + (G.wit().is_truncated() ? "+" : "") + "x" +
         std::to_string(G.cowit().size()) + (G.cowit().is_truncated() ? "+" : "");
}

Json law_results(const LawReport& rep) {
  Json out = Json::array();
  for (const auto& r : rep.results) {
    Json j;
    j["law"] = r.law;
    j["passed"] = r.passed;
    j["checked"] = r.checked;
    if (!r.passed) j["counterexample"] = r.counterexample;
    out.push_back(j);
  }
  return out;
}

// ---- validity ----

int cmd_validity(const Options& opt, const std::string& model_arg, const std::string& text,
                 const std::vector<std::string>& atoms, Json& report) {
  auto r = load_model(model_arg);
  LinearModel model(r, limits_for(opt));
  auto f = parse_formula(text);
  auto v = parse_valuation(r, atoms);
  auto G = interpret(model, *f, v);
  auto res = is_valid(model, G);

  report["formula"] = f->to_string();
  Json jatoms = Json::object();
  for (const auto& [name, e] : v) jatoms[name] = r.name(e);
  report["atoms"] = jatoms;
  report["bound"] = res.bound;
  report["object"] = shape(G);
  report["verdict"] = res.verdict();
  report["truncation"] = {{"witnesses", res.wit_truncated}, {"counter_witnesses", res.cowit_truncated}};
  if (res.valid) {
    report["witness"] = res.witness->to_string();
    report["counter_witnesses_checked"] = res.strategy.size();
  } else {
    Json refs = Json::array();
    for (std::size_t i = 0; i < res.refutation.size() && i < kMaxListed; ++i) {
      const auto& [x, y] = res.refutation[i];
      refs.push_back({{"witness", x.to_string()}, {"counter_witness", y.to_string()}});
    }
    report["refutation_total"] = res.refutation.size();
    report["refutation"] = refs;
  }
  return res.valid ? kOk : kNegative;
}

// ---- laws ----

int cmd_laws(const Options& opt, const std::string& model_arg, const std::string& suite,
             std::size_t max_index, Json& report) {
  auto tables = model_tables(model_arg);
  report["suite"] = suite;
  auto base = lineale_law_report(tables);
  if (!base.all_passed()) {
    report["verdict"] = "fail";
    report["base_model"] = "fails its own laws";
    report["laws"] = law_results(base);
    return kNegative;
  }
  DialecticaPair d(Lineale::from_tables(std::move(tables)), limits_for(opt));
  const auto& model = d.linear;
  report["max_index"] = max_index;

  LawReport rep;
  auto append = [&rep](LawReport more) {
    for (auto& r : more.results) rep.results.push_back(std::move(r));
  };
  const bool all = suite == "all";
  auto objs = small_objects(model, max_index);
  report["objects"] = objs.size();
  if (all || suite == "category") {
    CategoryAuditStats stats;
    append(category_audit(model, objs, &stats));
    report["morphisms"] = stats.morphisms;
    report["composable_triples"] = stats.composable_triples;
  }
  if (all || suite == "monoidal") append(monoidal_audit(model, objs));
  if (all || suite == "star-autonomy") append(star_autonomy_audit(model, objs));
  if (all || suite == "products") append(products_audit(model, objs));
  if (all || suite == "adjunction" || suite == "functor") {
    const std::size_t small = max_index < 1 ? max_index : 1;
    auto iobjs_small = small_intuitionistic_objects(d, small);
    auto lobjs_small = small_objects(model, small);
    if (all || suite == "adjunction") {
      append(adjunction_audit(d, small_intuitionistic_objects(d, max_index), objs, iobjs_small,
                              lobjs_small));
    }
    if (all || suite == "functor") append(functor_audit(d, iobjs_small, lobjs_small));
  }
  report["verdict"] = rep.all_passed() ? "pass" : "fail";
  report["laws"] = law_results(rep);
  return rep.all_passed() ? kOk : kNegative;
}

// ---- monad demos ----

int demo_first_law(const LinearModel& model, Json& report) {
  auto objs = small_objects(model, 2);
  std::size_t ok = 0;
  Json failures = Json::array();
  Json sample;
  for (const auto& G : objs) {
    auto w = first_monad_law_check(model, G);
    if (w.round_trips) {
      ++ok;
    } else if (failures.size() < kMaxListed) {
      failures.push_back(object_label(model.base(), G));
    }
    if (G.wit().size() == 2 && G.cowit().size() == 2 && sample.is_null()) {
      sample = {{"object", shape(G)},
                {"via_outer_eta", shape(w.via_outer_eta)},
                {"via_inner_eta", shape(w.via_inner_eta)}};
    }
  }
  report["objects"] = objs.size();
  report["isomorphisms"] = ok;
  report["sample"] = sample;
  report["verdict"] = ok == objs.size() ? "isomorphisms found" : "round trip failed";
  if (!failures.empty()) report["failures"] = failures;
  return ok == objs.size() ? kOk : kNegative;
}

int demo_second_law(const LinearModel& model, Json& report) {
  auto r = second_monad_law_check(model, second_law_instance(model));
  report["via_inner_mu"] = shape(r.via_inner_mu);
  report["via_outer_mu"] = shape(r.via_outer_mu);
  report["hom_forward_nonempty"] = r.hom_forward;
  report["hom_backward_nonempty"] = r.hom_backward;
  report["witness_transformation_typed"] = r.witness_transformation_typed;
  report["cowitness_transformation_typed"] = r.cowitness_transformation_typed;
  const bool empty = !r.hom_forward && !r.hom_backward;
  report["verdict"] = empty ? "hom empty both directions" : "hom nonempty";
  return empty ? kOk : kNegative;
}

Json bang_mu_json(const BangMuReport<Lineale>& r) {
  return {{"bang_of_mu", shape(r.bang_of_mu)},
          {"mu_of_bang", shape(r.mu_of_bang)},
          {"hom_forward_nonempty", r.hom_forward},
          {"hom_backward_nonempty", r.hom_backward}};
}

int demo_bang(const LinearModel& model, Json& report) {
  auto frozen = bang_mu_incompatibility(model, bang_mu_instance(model));
  auto control = bang_mu_incompatibility(model, bang_mu_control(model));
  auto control_iso = find_hom(model, control.bang_of_mu, control.mu_of_bang);
  const bool iso = control_iso && find_inverse(model, *control_iso).has_value();
  auto singleton = bang_mu_incompatibility(model, bang_mu_singleton(model));
  auto singleton_iso = find_hom(model, singleton.bang_of_mu, singleton.mu_of_bang);
  const bool s_iso = singleton_iso && find_inverse(model, *singleton_iso).has_value();

  report["instance"] = bang_mu_json(frozen);
  report["control"] = bang_mu_json(control);
  report["control"]["isomorphism"] = iso;
  report["singleton"] = bang_mu_json(singleton);
  report["singleton"]["isomorphism"] = s_iso;
  const bool empty = !frozen.hom_forward && !frozen.hom_backward;
  report["verdict"] = empty ? "hom empty both directions" : "hom nonempty";
  return empty && iso ? kOk : kNegative;
}

int demo_lax(const LinearModel& model, Json& report) {
  auto [G, H] = lax_monoidal_instance(model);
  auto m = lax_monoidal_map(model, G, H);
  auto s = search_inverse(model, m);
  auto [G1, H1] = lax_monoidal_control(model);
  auto c = search_inverse(model, lax_monoidal_map(model, G1, H1));
  report["source"] = shape(m.src());
  report["target"] = shape(m.dst());
  report["inverse"] = {{"found", s.found},
                       {"forward_candidates", s.forward_candidates},
                       {"backward_candidates", s.backward_candidates}};
  report["control_inverse_found"] = c.found;
  report["verdict"] = s.found ? "invertible" : "not invertible";
  return !s.found && c.found ? kOk : kNegative;
}

int cmd_monad(const Options& opt, const std::string& model_arg, const std::string& demo, Json& report) {
  LinearModel model(load_model(model_arg), limits_for(opt));
  report["demo"] = demo;
  report["bound"] = model.limits().multiset_bound;
  if (demo == "first-law") return demo_first_law(model, report);
  if (demo == "second-law-failure") return demo_second_law(model, report);
  if (demo == "bang-incompatibility") return demo_bang(model, report);
  return demo_lax(model, report);
}

// ---- model-check ----

int cmd_model_check(const std::string& path, Json& report) {
  auto tables = model_tables(path);
  report["elements"] = tables.names;
  try {
    validate_lineale(tables);
  } catch (const AxiomViolation& e) {
    report["verdict"] = "AxiomViolation";
    report["law"] = e.law();
    report["witness"] = e.witness();
    return kNegative;
  }
  auto rep = check_model_laws(Lineale::from_tables(std::move(tables)));
  report["verdict"] = rep.all_passed() ? "pass" : "fail";
  report["laws"] = law_results(rep);
  return rep.all_passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialectica constructions over finite lineales"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "Enumeration cap (overrides DIALECTICA_BUDGET)");
  app.add_flag("--timing", opt.timing, "Include elapsed time in the report");

  std::string model = "bool";
  std::string formula;
  std::vector<std::string> atoms;
  auto* validity = app.add_subcommand("validity", "Decide validity of a formula");
  validity->add_option("--model", model, "Model config path or 'bool'")->capture_default_str();
  validity->add_option("--formula", formula, "Formula")->required();
  validity->add_option("--atoms", atoms, "Atom values, name=element")->delimiter(',');
  validity->add_option("--bound", opt.bound, "Multiset bound")->capture_default_str();

  std::string suite;
  std::size_t max_index = 2;
  auto* laws = app.add_subcommand("laws", "Run a law suite over small objects");
  laws->add_option("--model", model, "Model config path or 'bool'")->capture_default_str();
  laws->add_option("--suite", suite, "Suite")
      ->required()
      ->check(CLI::IsMember(
          {"category", "monoidal", "star-autonomy", "products", "adjunction", "functor", "all"}));
  laws->add_option("--max-index", max_index, "Largest index set size")->capture_default_str();
  laws->add_option("--bound", opt.bound, "Multiset bound")->capture_default_str();

  std::string demo;
  auto* monad = app.add_subcommand("monad", "Monad demonstrations on fixed instances");
  monad->add_option("--demo", demo, "Demonstration")
      ->required()
      ->check(CLI::IsMember({"first-law", "second-law-failure", "bang-incompatibility", "lax-monoidal"}));
  monad->add_option("--bound", opt.bound, "Multiset bound")->capture_default_str();

  std::string path;
  auto* check = app.add_subcommand("model-check", "Validate a model config");
  check->add_option("path", path, "Model config path or 'bool'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  Json report;
  std::vector<std::string> echo(argv + 1, argv + argc);
  report["command"] = echo;
  const auto start = std::chrono::steady_clock::now();
  int code = kError;
  try {
    if (*validity) {
      report["model"] = model;
      code = cmd_validity(opt, model, formula, atoms, report);
    } else if (*laws) {
      report["model"] = model;
      code = cmd_laws(opt, model, suite, max_index, report);
    } else if (*monad) {
      code = cmd_monad(opt, "bool", demo, report);
    } else {
      code = cmd_model_check(path, report);
    }
  } catch (const BudgetExceeded& e) {
    report["verdict"] = "error";
    report["error"] = e.what();
    report["requested"] = e.requested();
    report["budget"] = e.budget();
    code = kError;
  } catch (const ParseError& e) {
    report["verdict"] = "error";
    report["error"] = e.what();
    report["position"] = e.position();
    code = kError;
  } catch (const std::exception& e) {
    report["verdict"] = "error";
    report["error"] = e.what();
    code = kError;
  }
  if (opt.timing) {
    report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  }
  emit(opt, report);
  if (code == kError) std::cerr << "error: " << report["error"].get<std::string>() << "\n";
  return code;
}
