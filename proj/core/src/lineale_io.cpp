#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "dialectica/errors.hpp"
#include "dialectica/lineale.hpp"
#include "json.hpp"

namespace dialectica {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& msg) {
  throw AxiomViolation("config: " + msg, {});
}

std::uint32_t lookup(const std::map<std::string, std::uint32_t>& ids, const json& j,
                     const std::string& field) {
  if (!j.is_string()) config_error(field + " entries must be element names");
  auto it = ids.find(j.get<std::string>());
  if (it == ids.end()) config_error(field + " names unknown element " + j.get<std::string>());
  return it->second;
}

std::pair<std::string, std::string> split_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) config_error("tensor key '" + key + "' is not of the form a,b");
  auto trim = [](std::string s) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  return {trim(key.substr(0, comma)), trim(key.substr(comma + 1))};
}

std::vector<std::uint32_t> unary_table(const json& j, const std::map<std::string, std::uint32_t>& ids,
                                       const std::string& field) {
  if (!j.is_object()) config_error(field + " must be an object");
  std::vector<std::uint32_t> out(ids.size());
  std::vector<bool> seen(ids.size(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto a = lookup(ids, json(it.key()), field);
    out[a] = lookup(ids, it.value(), field);
    seen[a] = true;
  }
  for (const auto& [name, id] : ids) {
    if (!seen[id]) config_error(field + " is missing element " + name);
  }
  return out;
}

}  // namespace

LinealeTables parse_lineale_tables(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    config_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) config_error("top level must be an object");
  static const std::set<std::string> known = {"elements", "leq", "tensor", "unit", "dual", "bang"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!known.count(it.key())) config_error("unknown field " + it.key());
  }
  for (const char* f : {"elements", "leq", "tensor", "unit", "dual"}) {
    if (!doc.contains(f)) config_error(std::string("missing field ") + f);
  }

  LinealeTables t;
  std::map<std::string, std::uint32_t> ids;
  if (!doc["elements"].is_array()) config_error("elements must be an array");
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) config_error("elements must be strings");
    auto name = e.get<std::string>();
    if (ids.count(name)) config_error("duplicate element " + name);
    ids[name] = static_cast<std::uint32_t>(t.names.size());
    t.names.push_back(name);
  }
  const std::size_t n = t.names.size();

  t.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) t.leq[i][i] = true;
  if (!doc["leq"].is_array()) config_error("leq must be an array of pairs");
  for (const auto& p : doc["leq"]) {
    if (!p.is_array() || p.size() != 2) config_error("leq entries must be pairs");
    t.leq[lookup(ids, p[0], "leq")][lookup(ids, p[1], "leq")] = true;
  }

  t.tensor.assign(n, std::vector<std::uint32_t>(n, 0));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  if (!doc["tensor"].is_object()) config_error("tensor must be an object");
  for (auto it = doc["tensor"].begin(); it != doc["tensor"].end(); ++it) {
    auto [a, b] = split_key(it.key());
    auto ia = lookup(ids, json(a), "tensor");
    auto ib = lookup(ids, json(b), "tensor");
    t.tensor[ia][ib] = lookup(ids, it.value(), "tensor");
    seen[ia][ib] = true;
  }
  // A table may list only one of a,b and b,a.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[a][b]) continue;
      if (!seen[b][a]) config_error("tensor is missing " + t.names[a] + "," + t.names[b]);
      t.tensor[a][b] = t.tensor[b][a];
    }
  }

  t.unit = lookup(ids, doc["unit"], "unit");
  t.dual = unary_table(doc["dual"], ids, "dual");
  if (doc.contains("bang")) t.bang = unary_table(doc["bang"], ids, "bang");
  return t;
}

Lineale load_finite_lineale(std::string_view text) {
  return Lineale::from_tables(parse_lineale_tables(text));
}

Lineale load_finite_lineale_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_finite_lineale(ss.str());
}

std::string lineale_to_json(const Lineale& l) {
  const auto& t = l.tables();
  json doc;
  doc["elements"] = t.names;
  json leq = json::array();
  for (std::size_t a = 0; a < t.names.size(); ++a) {
    for (std::size_t b = 0; b < t.names.size(); ++b) {
      if (a != b && t.leq[a][b]) leq.push_back({t.names[a], t.names[b]});
    }
  }
  doc["leq"] = leq;
  json ten = json::object();
  for (std::size_t a = 0; a < t.names.size(); ++a) {
    for (std::size_t b = 0; b < t.names.size(); ++b) {
      ten[t.names[a] + "," + t.names[b]] = t.names[t.tensor[a][b]];
    }
  }
  doc["tensor"] = ten;
  doc["unit"] = t.names[t.unit];
  json dual = json::object();
  for (std::size_t a = 0; a < t.names.size(); ++a) dual[t.names[a]] = t.names[t.dual[a]];
  doc["dual"] = dual;
  if (t.bang) {
    json bang = json::object();
    for (std::size_t a = 0; a < t.names.size(); ++a) bang[t.names[a]] = t.names[(*t.bang)[a]];
    doc["bang"] = bang;
  }
  return doc.dump(2);
}

}  // namespace dialectica
