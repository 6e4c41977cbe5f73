#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vfkit/polynomial.hpp"

namespace vfkit {

enum class TokenKind { Identifier, Integer, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t offset;
};

/// Splits polynomial text into tokens. Throws ParseError with the byte
/// offset of the first character that cannot start a token.
std::vector<Token> tokenize(std::string_view text);

/// Parses a polynomial expression over `ctx`.
///
/// Grammar, loosest to tightest binding:
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := ('-' | '+') unary | power
///     power   := primary ('^' INTEGER)?
///     primary := INTEGER | IDENTIFIER | '(' expr ')'
///
/// `/` only accepts a nonzero constant divisor. Implicit multiplication is
/// rejected. Every failure is a ParseError carrying a byte offset.
Polynomial parse_poly(std::string_view text, const VarContext& ctx);

}  // namespace vfkit
