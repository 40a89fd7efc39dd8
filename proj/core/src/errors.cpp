#include "dialectica/errors.hpp"

#include <utility>

namespace dialectica {

namespace {

std::string join_witness(const std::vector<std::string>& witness) {
  std::string out = "(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += ", ";
    out += witness[i];
  }
  return out + ")";
}

}  // namespace

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t requested,
                               std::uint64_t budget)
    : Error(what + ": " + std::to_string(requested) + " elements exceeds budget " +
            std::to_string(budget)),
      requested_(requested),
      budget_(budget) {}

AxiomViolation::AxiomViolation(std::string law, std::vector<std::string> witness)
    : Error("axiom violated: " + law + " at " + join_witness(witness)),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

}  // namespace dialectica
