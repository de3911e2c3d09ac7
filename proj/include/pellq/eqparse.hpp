#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pellq/general_pell.hpp"

namespace pellq {

enum class TokenKind { integer, identifier, caret, star, plus, minus, equals, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position; // 0-based character offset
};

enum class ParseErrorKind {
  illegal_character,
  unexpected_token,
  odd_exponent,
  zero_exponent,
  zero_coefficient,
  zero_constant,
  missing_constant,
  repeated_variable,
  trailing_tokens,
};

const char* to_string(ParseErrorKind kind);

/// Rejection with a machine-readable kind and the 0-based offset it points at.
class ParseError : public std::runtime_error {
public:
  ParseError(ParseErrorKind kind, std::size_t position, const std::string& message);

  ParseErrorKind kind() const { return kind_; }
  std::size_t position() const { return position_; }

private:
  ParseErrorKind kind_;
  std::size_t position_;
};

/// Longest-match tokenization; whitespace skipped, integers are digit runs.
std::vector<Token> tokenize(std::string_view input);

/// Accepts exactly the normal form
///   [['-'] INT ['*']] VAR '^' INT '=' [['-'] INT ['*']] VAR '^' INT (('+'|'-') INT)
/// with even exponents >= 2, distinct variables, nonzero coefficients and a
/// nonzero trailing constant. Implicit multiplication ("2y^4") is accepted.
EquationSpec parse(const std::vector<Token>& tokens);

/// tokenize + parse.
EquationSpec parse_equation(std::string_view input);

/// Canonical rendering "C*x^{2a} = D*y^{2b} +/- |E|", coefficient 1 elided.
std::string unparse(const EquationSpec& spec);

} // namespace pellq
