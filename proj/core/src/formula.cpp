#include "dialectica/formula.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dialectica/errors.hpp"

namespace dialectica {

Formula::Formula(Kind kind, std::string name, FormulaPtr left, FormulaPtr right,
                 std::shared_ptr<const SimAddFamily> family)
    : kind_(kind), name_(std::move(name)), left_(std::move(left)), right_(std::move(right)),
      family_(std::move(family)) {}

namespace {

using K = Formula::Kind;

// Formula's constructor is private; this subclass exists only to reach it.
struct Node : Formula {
  Node(K kind, std::string name, FormulaPtr l, FormulaPtr r, std::shared_ptr<const SimAddFamily> fam)
      : Formula(kind, std::move(name), std::move(l), std::move(r), std::move(fam)) {}
};

FormulaPtr node(K kind, FormulaPtr l = nullptr, FormulaPtr r = nullptr) {
  if ((kind == K::Dual || kind == K::Bang || kind == K::Whynot) && !l)
    throw InvariantViolation("unary connective without operand");
  if ((kind == K::Tensor || kind == K::Par || kind == K::With || kind == K::Plus ||
       kind == K::Lollipop) &&
      (!l || !r))
    throw InvariantViolation("binary connective without operands");
  return std::make_shared<Node>(kind, "", std::move(l), std::move(r), nullptr);
}

}  // namespace

FormulaPtr Formula::atom(std::string name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0])))
    throw InvariantViolation("atom names start with a lowercase letter: '" + name + "'");
  return std::make_shared<Node>(K::Atom, std::move(name), nullptr, nullptr, nullptr);
}
FormulaPtr Formula::one() { return node(K::One); }
FormulaPtr Formula::bot() { return node(K::Bot); }
FormulaPtr Formula::top() { return node(K::Top); }
FormulaPtr Formula::zero() { return node(K::Zero); }
FormulaPtr Formula::dual(FormulaPtr a) { return node(K::Dual, std::move(a)); }
FormulaPtr Formula::tensor(FormulaPtr a, FormulaPtr b) { return node(K::Tensor, std::move(a), std::move(b)); }
FormulaPtr Formula::par(FormulaPtr a, FormulaPtr b) { return node(K::Par, std::move(a), std::move(b)); }
FormulaPtr Formula::with_(FormulaPtr a, FormulaPtr b) { return node(K::With, std::move(a), std::move(b)); }
FormulaPtr Formula::plus(FormulaPtr a, FormulaPtr b) { return node(K::Plus, std::move(a), std::move(b)); }
FormulaPtr Formula::lollipop(FormulaPtr a, FormulaPtr b) {
  return node(K::Lollipop, std::move(a), std::move(b));
}
FormulaPtr Formula::bang(FormulaPtr a) { return node(K::Bang, std::move(a)); }
FormulaPtr Formula::whynot(FormulaPtr a) { return node(K::Whynot, std::move(a)); }

FormulaPtr Formula::simadd(SimAddFamily family) {
  if (family.X.empty() && family.Y.empty())
    throw InvariantViolation("simultaneous additive over two empty index sets");
  if (!family.fam) throw InvariantViolation("simultaneous additive without a formula family");
  return std::make_shared<Node>(K::SimAdd, "", nullptr, nullptr,
                                std::make_shared<const SimAddFamily>(std::move(family)));
}

const SimAddFamily& Formula::family() const {
  if (!family_) throw ContractViolation("formula is not a simultaneous additive");
  return *family_;
}

bool Formula::is_unary() const {
  return kind_ == K::Dual || kind_ == K::Bang || kind_ == K::Whynot;
}

bool Formula::is_binary() const { return static_cast<bool>(right_); }

bool Formula::is_constant() const {
  return kind_ == K::One || kind_ == K::Bot || kind_ == K::Top || kind_ == K::Zero;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_) return false;
  if (a.kind_ == K::SimAdd) return a.family_ == b.family_;
  auto same = [](const FormulaPtr& p, const FormulaPtr& q) {
    if (!p || !q) return !p && !q;
    return *p == *q;
  };
  return same(a.left_, b.left_) && same(a.right_, b.right_);
}

namespace {

const char* binary_symbol(K k) {
  switch (k) {
    case K::Tensor: return " * ";
    case K::Par: return " | ";
    case K::With: return " & ";
    case K::Plus: return " + ";
    case K::Lollipop: return " -o ";
    default: return nullptr;
  }
}

std::string body(const Formula& f);

// A self-delimiting rendering: leaves bare, everything else parenthesized.
std::string primary(const Formula& f) {
  if (f.kind() == K::Atom || f.is_constant() || f.kind() == K::SimAdd) return body(f);
  return "(" + body(f) + ")";
}

std::string body(const Formula& f) {
  switch (f.kind()) {
    case K::Atom: return f.name();
    case K::One: return "1";
    case K::Bot: return "bot";
    case K::Top: return "top";
    case K::Zero: return "0";
    case K::Dual: return primary(*f.left()) + "^";
    case K::Bang: return "!" + primary(*f.left());
    case K::Whynot: return "?" + primary(*f.left());
    case K::SimAdd: {
      const auto& fam = f.family();
      return "<simadd " + std::to_string(fam.X.size()) + "x" + std::to_string(fam.Y.size()) + ">";
    }
    default: return primary(*f.left()) + binary_symbol(f.kind()) + primary(*f.right());
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  FormulaPtr run() {
    auto f = lollipop();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  FormulaPtr lollipop() {
    auto lhs = additive();
    if (eat("-o")) return Formula::lollipop(lhs, lollipop());
    return lhs;
  }

  FormulaPtr additive() {
    auto lhs = multiplicative();
    for (;;) {
      if (eat("&")) lhs = Formula::with_(lhs, multiplicative());
      else if (eat("+")) lhs = Formula::plus(lhs, multiplicative());
      else return lhs;
    }
  }

  FormulaPtr multiplicative() {
    auto lhs = postfix();
    for (;;) {
      if (eat("*")) lhs = Formula::tensor(lhs, postfix());
      else if (eat("|")) lhs = Formula::par(lhs, postfix());
      else return lhs;
    }
  }

  FormulaPtr postfix() {
    auto f = prefix();
    while (eat("^")) f = Formula::dual(f);
    return f;
  }

  FormulaPtr prefix() {
    if (eat("!")) return Formula::bang(prefix());
    if (eat("?")) return Formula::whynot(prefix());
    return primary_();
  }

  FormulaPtr primary_() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto f = lollipop();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    if (c == '1') { ++pos_; return Formula::one(); }
    if (c == '0') { ++pos_; return Formula::zero(); }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                  std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "bot") return Formula::bot();
      if (word == "top") return Formula::top();
      return Formula::atom(word);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == K::Atom) out.insert(f.name());
  if (f.kind() == K::SimAdd) {
    const auto& fam = f.family();
    for (const auto& x : fam.X)
      for (const auto& y : fam.Y) collect_atoms(*fam.fam(x, y), out);
  }
  if (f.left()) collect_atoms(*f.left(), out);
  if (f.right()) collect_atoms(*f.right(), out);
}

}  // namespace

std::string Formula::to_string() const { return body(*this); }

FormulaPtr parse_formula(std::string_view text) { return Parser(text).run(); }

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return {out.begin(), out.end()};
}

std::size_t depth(const Formula& f) {
  std::size_t d = 0;
  if (f.left()) d = std::max(d, depth(*f.left()) + 1);
  if (f.right()) d = std::max(d, depth(*f.right()) + 1);
  return d;
}

std::size_t size(const Formula& f) {
  return 1 + (f.left() ? size(*f.left()) : 0) + (f.right() ? size(*f.right()) : 0);
}

bool is_mell(const Formula& f) {
  switch (f.kind()) {
    case K::With: case K::Plus: case K::Top: case K::Zero: case K::SimAdd: return false;
    default: break;
  }
  return (!f.left() || is_mell(*f.left())) && (!f.right() || is_mell(*f.right()));
}

std::vector<FormulaPtr> generate_mell(const std::vector<FormulaPtr>& leaves, std::size_t d) {
  std::vector<FormulaPtr> all = leaves;
  for (std::size_t level = 0; level < d; ++level) {
    std::vector<FormulaPtr> next = leaves;
    for (const auto& a : all) {
      next.push_back(Formula::dual(a));
      next.push_back(Formula::bang(a));
      next.push_back(Formula::whynot(a));
    }
    for (const auto& a : all)
      for (const auto& b : all) {
        next.push_back(Formula::tensor(a, b));
        next.push_back(Formula::par(a, b));
        next.push_back(Formula::lollipop(a, b));
      }
    all = std::move(next);
  }
  return all;
}

namespace {

Value json_to_index(const nlohmann::json& j) {
  if (j.is_string()) return Value::symbol(j.get<std::string>());
  if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
  throw ParseError("index set elements must be strings or integers", 0);
}

std::string index_key(const nlohmann::json& j) {
  return j.is_string() ? j.get<std::string>() : std::to_string(j.get<std::int64_t>());
}

}  // namespace

FormulaPtr load_simadd(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("X") || !doc.contains("Y") || !doc.contains("fam"))
    throw ParseError("simultaneous additive needs keys X, Y and fam", 0);
  if (!doc["X"].is_array() || !doc["Y"].is_array() || !doc["fam"].is_object())
    throw ParseError("X and Y must be arrays and fam an object", 0);

  std::vector<Value> xs, ys;
  std::vector<std::string> xkeys, ykeys;
  for (const auto& j : doc["X"]) { xs.push_back(json_to_index(j)); xkeys.push_back(index_key(j)); }
  for (const auto& j : doc["Y"]) { ys.push_back(json_to_index(j)); ykeys.push_back(index_key(j)); }

  std::map<std::pair<Value, Value>, FormulaPtr> table;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t k = 0; k < ys.size(); ++k) {
      std::string key = xkeys[i] + "," + ykeys[k];
      if (!doc["fam"].contains(key)) throw ParseError("fam is missing entry '" + key + "'", 0);
      const auto& entry = doc["fam"][key];
      if (!entry.is_string()) throw ParseError("fam entry '" + key + "' must be a formula string", 0);
      table.emplace(std::pair{xs[i], ys[k]}, parse_formula(entry.get<std::string>()));
    }
  if (doc["fam"].size() != table.size())
    throw ParseError("fam has entries outside X x Y", 0);

  auto shared = std::make_shared<const decltype(table)>(std::move(table));
  SimAddFamily fam{EffectiveSet::of(xs), EffectiveSet::of(ys),
                   [shared](const Value& x, const Value& y) { return shared->at({x, y}); }};
  return Formula::simadd(std::move(fam));
}

FormulaPtr load_simadd_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_simadd(ss.str());
}

}  // namespace dialectica
