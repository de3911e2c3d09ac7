#include "pellq/eqparse.hpp"

#include <cctype>
#include <tuple>

namespace pellq {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Consumes the token stream produced by tokenize (always 'end'-terminated).
class Parser {
public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  EquationSpec run() {
    auto [c, left_var, a] = side();
    expect(TokenKind::equals, "'='");
    auto [d, right_var, b] = side();
    if (right_var == left_var)
      throw ParseError(ParseErrorKind::repeated_variable, last_var_position_,
                       "repeated variable '" + right_var + "'");
    BigInt e = trailing_constant();
    if (!at(TokenKind::end))
      throw ParseError(ParseErrorKind::trailing_tokens, peek().position,
                       "trailing tokens after equation");
    return EquationSpec{std::move(c), a, std::move(d), b, std::move(e)};
  }

private:
  // [['-'] INT ['*']] VAR '^' INT
  std::tuple<BigInt, std::string, std::int64_t> side() {
    bool negative = false;
    if (at(TokenKind::minus)) {
      negative = true;
      advance();
    }
    BigInt coeff(1);
    if (at(TokenKind::integer)) {
      const Token& tok = advance();
      coeff = BigInt(std::string_view(tok.text));
      if (coeff.is_zero())
        throw ParseError(ParseErrorKind::zero_coefficient, tok.position,
                         "coefficient must be nonzero");
      if (at(TokenKind::star))
        advance();
    }
    if (negative)
      coeff = -coeff;
    const Token& var = expect(TokenKind::identifier, "variable");
    last_var_position_ = var.position;
    expect(TokenKind::caret, "'^'");
    const Token& exp_tok = expect(TokenKind::integer, "exponent");
    BigInt exponent(std::string_view(exp_tok.text));
    if (exponent.is_zero())
      throw ParseError(ParseErrorKind::zero_exponent, exp_tok.position,
                       "exponent must be >= 2");
    if (exponent.odd())
      throw ParseError(ParseErrorKind::odd_exponent, exp_tok.position, "odd exponent");
    std::int64_t full;
    try {
      full = exponent.to_int64();
    } catch (const std::overflow_error&) {
      throw ParseError(ParseErrorKind::unexpected_token, exp_tok.position,
                       "exponent too large");
    }
    return {std::move(coeff), var.text, full / 2};
  }

  // ('+'|'-') INT, required and nonzero
  BigInt trailing_constant() {
    if (at(TokenKind::end))
      throw ParseError(ParseErrorKind::missing_constant, peek().position,
                       "missing constant term (E must be nonzero)");
    if (!at(TokenKind::plus) && !at(TokenKind::minus))
      throw ParseError(ParseErrorKind::unexpected_token, peek().position,
                       "expected '+' or '-' before the constant term");
    const bool negative = at(TokenKind::minus);
    advance();
    const Token& tok = expect(TokenKind::integer, "constant");
    BigInt e{std::string_view(tok.text)};
    if (e.is_zero())
      throw ParseError(ParseErrorKind::zero_constant, tok.position, "E must be nonzero");
    return negative ? -e : e;
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at(TokenKind kind) const { return peek().kind == kind; }

  const Token& advance() { return tokens_[pos_++]; }

  const Token& expect(TokenKind kind, const char* what) {
    if (!at(kind))
      throw ParseError(ParseErrorKind::unexpected_token, peek().position,
                       std::string("expected ") + what);
    return advance();
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t last_var_position_ = 0;
};

} // namespace

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
  case ParseErrorKind::illegal_character:
    return "illegal character";
  case ParseErrorKind::unexpected_token:
    return "unexpected token";
  case ParseErrorKind::odd_exponent:
    return "odd exponent";
  case ParseErrorKind::zero_exponent:
    return "zero exponent";
  case ParseErrorKind::zero_coefficient:
    return "zero coefficient";
  case ParseErrorKind::zero_constant:
    return "zero constant";
  case ParseErrorKind::missing_constant:
    return "missing constant";
  case ParseErrorKind::repeated_variable:
    return "repeated variable";
  case ParseErrorKind::trailing_tokens:
    return "trailing tokens";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t position, const std::string& message)
    : std::runtime_error(message + " at position " + std::to_string(position)), kind_(kind),
      position_(position) {}

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < input.size() && std::isdigit(static_cast<unsigned char>(input[i])))
        ++i;
      tokens.push_back({TokenKind::integer, std::string(input.substr(start, i - start)), start});
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t start = i;
      while (i < input.size() && is_ident_char(input[i]))
        ++i;
      tokens.push_back(
          {TokenKind::identifier, std::string(input.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
    case '^':
      kind = TokenKind::caret;
      break;
    case '*':
      kind = TokenKind::star;
      break;
    case '+':
      kind = TokenKind::plus;
      break;
    case '-':
      kind = TokenKind::minus;
      break;
    case '=':
      kind = TokenKind::equals;
      break;
    default:
      throw ParseError(ParseErrorKind::illegal_character, i,
                       std::string("illegal character '") + c + "'");
    }
    tokens.push_back({kind, std::string(1, c), i});
    ++i;
  }
  tokens.push_back({TokenKind::end, "", input.size()});
  return tokens;
}

EquationSpec parse(const std::vector<Token>& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::end)
    throw std::invalid_argument("parse: token stream must be end-terminated");
  EquationSpec spec = Parser(tokens).run();
  validate_spec(spec);
  return spec;
}

EquationSpec parse_equation(std::string_view input) { return parse(tokenize(input)); }

std::string unparse(const EquationSpec& spec) {
  validate_spec(spec);
  auto monomial = [](const BigInt& coeff, const char* var, std::int64_t half_exp) {
    std::string s;
    if (coeff == BigInt(-1))
      s += "-";
    else if (coeff != BigInt(1))
      s += coeff.to_string() + "*";
    s += var;
    s += "^" + std::to_string(2 * half_exp);
    return s;
  };
  std::string rhs_tail =
      spec.E.is_negative() ? " - " + abs(spec.E).to_string() : " + " + spec.E.to_string();
  return monomial(spec.C, "x", spec.a) + " = " + monomial(spec.D, "y", spec.b) + rhs_tail;
}

} // namespace pellq
