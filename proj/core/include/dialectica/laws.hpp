#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dialectica/lineale.hpp"

namespace dialectica {

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> counterexample;
};

struct LawReport {
  std::vector<LawResult> results;

  bool all_passed() const;
  const LawResult* find(const std::string& law) const;
  // One line per law: "pass <law> (<n> checks)" or "FAIL <law> at (<witness>)".
  std::string to_text() const;
};

// Accumulates checks for one law, keeping the first counterexample.
class LawTally {
 public:
  explicit LawTally(std::string law) { result_.law = std::move(law); }
  // Returns ok so callers can stop early.
  bool check(bool ok, const std::vector<std::string>& witness);
  bool failed() const { return !result_.passed; }
  LawResult result() const { return result_; }

 private:
  LawResult result_;
};

// Every lineale law on the raw tables, each with its first counterexample.
LawReport lineale_law_report(const LinealeTables& t);

// The full law suite on a lineale: category, symmetric monoidal, *-autonomy,
// products where they exist, and the L -| M adjunction with monoidality.
LawReport check_model_laws(const Lineale& m);

}  // namespace dialectica
