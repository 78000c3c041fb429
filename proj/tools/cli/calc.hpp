#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "semifield/semifield.hpp"

namespace semifield::cli {

/// Syntax error in a calculator expression, with the 0-based offset of the
/// offending token.
class CalcParseError : public std::runtime_error {
public:
    CalcParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Evaluates an expression over `field`:
///   expr  := term (('+.' | '+^') term)*
///   term  := unary (('*.' | '*^') unary)*
///   unary := 'inv' '(' expr ')' | '(' expr ')' | atom
///   atom  := numeral | inf | -inf | bot | top | e
/// `.` selects the lower operation and `^` the upper one; bot, top and e are
/// those of `field`. Both binary levels associate to the left.
ExtendedReal evaluate(std::string_view expr, const Semifield& field);

/// The expression with a caret under `column`, indented by two spaces.
std::string caret_diagnostic(std::string_view expr, std::size_t column);

}  // namespace semifield::cli
