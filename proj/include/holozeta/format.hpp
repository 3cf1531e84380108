#ifndef HOLOZETA_FORMAT_HPP
#define HOLOZETA_FORMAT_HPP

#include <string>
#include <string_view>

#include "holozeta/operator.hpp"

namespace holozeta {

// Error raised by the operator parser, positioned at a 1-based line/column.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar: integers, rationals p/q, generator names of `ring`, + - * ^ and
// parentheses. Products must be explicit; exponents are nonnegative integer
// literals. The result is normally ordered.
WeylOperator parse_operator(std::string_view text, const Ring& ring, int line = 1);

// Canonical text form; parse_operator(to_string(p), ring) == p.
std::string to_string(const WeylOperator& op);

}  // namespace holozeta

#endif  // HOLOZETA_FORMAT_HPP
