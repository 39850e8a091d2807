#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "dring/errors.hpp"
#include "dring/field.hpp"
#include "dring/poly.hpp"

namespace dring {

/// Syntax or name error with a 1-based source position.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Where an embedded expression starts inside a larger file.
struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Recursive-descent parser for
///
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' integer)?
///   atom  := integer | identifier | '(' expr ')'
///
/// Identifiers must be ring variables. Division by a non-constant yields a
/// rational function.
RationalFunction parse_expression(std::string_view text, const RingPtr& ring, SourcePos origin = {});

/// As parse_expression, but the value must be a polynomial.
Poly parse_polynomial(std::string_view text, const RingPtr& ring, SourcePos origin = {});

/// Constant expression such as `-5/2`.
Rational parse_constant(std::string_view text, const RingPtr& ring, SourcePos origin = {});

}  // namespace dring
