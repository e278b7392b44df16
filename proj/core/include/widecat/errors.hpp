#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace widecat {

// Failure of a well-posed operation, carrying a stable machine-readable
// name that downstream consumers (and the CLI) report verbatim.
// Names in use include: "unsupported-ring", "ring-mismatch",
// "dimension-mismatch", "pd-bound-exceeded", "bound-exceeded",
// "hom-bound-exceeded", "invalid-module", "invalid-map",
// "not-a-complex", "not-a-chain-map", "inconsistent-system".
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Rejection of malformed input text, with 1-based line/column of the
// offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace widecat
