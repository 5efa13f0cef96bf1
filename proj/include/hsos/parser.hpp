#pragma once

#include <stdexcept>
#include <string>

#include "hsos/hermitian_poly.hpp"

namespace hsos {

/// Syntax or range error while parsing a polynomial expression. line/col are
/// 1-based and point at the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Parse an expression over z and zbar into a coefficient matrix.
///
/// Grammar:
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := 'z' | 'zbar' | 'conj' '(' 'z' ')' | number | '(' expr ')'
///   number := real | '(' real ('+'|'-') real 'i' ')'
/// Whitespace is insignificant. Implicit multiplication is rejected ("2z" is
/// a syntax error). Real literals use the usual decimal/scientific forms; a
/// complex literal spells out both parts, e.g. "(0-1i)".
///
/// The expression is expanded into a coefficient matrix on the fly; powers
/// use repeated squaring. Throws ParseError on syntax errors, non-integer or
/// oversized exponents, and on expansion past the degree limit.
HermitianPoly parse(const std::string& text);

/// Canonical text form: terms sorted by (j+k, j) ascending, zero
/// coefficients omitted, real coefficients bare, complex ones as "(a+bi)".
/// Numbers print in shortest round-trip form, so parse(format(f)) == f
/// exactly. The zero polynomial prints as "0".
std::string format(const HermitianPoly& f);

}  // namespace hsos
