#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dialectica {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured element cap.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t budget);
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t requested_;
  std::uint64_t budget_;
};

// A model table fails one of the lineale laws; witness names the offending elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string law, std::vector<std::string> witness);
  const std::string& law() const noexcept { return law_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string law_;
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A function was applied to an element outside its enumerated table and has no rule for it.
class TruncationMiss : public Error {
 public:
  using Error::Error;
};

// A construction that must type-check did not.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ShapeUnsupported : public Error {
 public:
  using Error::Error;
};

// A data structure was built with arguments that break its invariants.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace dialectica
