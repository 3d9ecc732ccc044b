#ifndef PENALTY_ERROR_HPP
#define PENALTY_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace penalty {

/// Malformed textual input (formulas, KB files, DIMACS/WCNF).
/// Line and column are 1-based; zero means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An enumeration or search would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An interpretation/assignment does not cover the atoms a formula needs.
class VocabularyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace penalty

#endif  // PENALTY_ERROR_HPP
