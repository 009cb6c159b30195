#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cforge/expr.hpp"

namespace cforge::sym {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, size_t offset)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

/// Parses the expression grammar: exact rational literals, registered
/// variable names, + - * / ^ with integer exponents (negative exponents fold
/// into the denominator), and parentheses. Printing a canonical Expr and
/// re-parsing it is a fixed point.
Expr parse_expr(std::string_view text, VarTablePtr table);

}  // namespace cforge::sym
