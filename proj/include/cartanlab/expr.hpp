#ifndef CARTANLAB_EXPR_HPP
#define CARTANLAB_EXPR_HPP

#include <stdexcept>
#include <string>

#include "cartanlab/scalar_field.hpp"

namespace cartanlab {

/// Syntax or domain error raised while parsing an expression string.
struct ExprError : std::runtime_error {
  ExprError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

/// Raised when evaluating ln/sqrt outside their real domain; carries the
/// offending sample point.
struct DomainError : std::runtime_error {
  DomainError(const std::string& fn, const Point& p);
  Point point;
};

/// Parse an arithmetic expression over x0..x3 into a scalar field evaluated
/// with jet arithmetic.
///
/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-'? base ('^' integer)?
///   base   := number | 'x0'..'x3' | func '(' expr ')' | '(' expr ')'
///   func   := exp | ln | sqrt | sin | cos
ScalarField parse_expression(const std::string& src);

}  // namespace cartanlab

#endif
