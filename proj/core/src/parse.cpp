#include "vfkit/parse.hpp"

#include <cctype>

#include "vfkit/errors.hpp"

namespace vfkit {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

const char* describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Integer: return "integer";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

class Parser {
public:
  Parser(std::string_view text, const VarContext& ctx) : tokens_(tokenize(text)), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial result = expr();
    if (peek().kind != TokenKind::End) {
      throw ParseError(std::string("unexpected ") + describe(peek().kind), peek().offset);
    }
    return result;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Polynomial expr() {
    Polynomial acc = term();
    while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
      bool minus = next().kind == TokenKind::Minus;
      Polynomial rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
      const Token& op = next();
      Polynomial rhs = unary();
      if (op.kind == TokenKind::Star) {
        acc = acc * rhs;
        continue;
      }
      if (!rhs.is_constant()) throw ParseError("division by a non-constant expression", op.offset);
      if (rhs.is_zero()) throw ParseError("division by zero", op.offset);
      acc = acc.scaled(rhs.constant_value().inverse());
    }
    return acc;
  }

  Polynomial unary() {
    if (peek().kind == TokenKind::Minus) {
      next();
      return -unary();
    }
    if (peek().kind == TokenKind::Plus) {
      next();
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    next();
    const Token& exp = peek();
    if (exp.kind == TokenKind::Minus) throw ParseError("negative exponent", exp.offset);
    if (exp.kind != TokenKind::Integer) {
      throw ParseError("exponent must be a nonnegative integer literal", exp.offset);
    }
    next();
    BigInt value = BigInt::parse(exp.text);
    if (value > BigInt(static_cast<std::int64_t>(Monomial::kMaxExponent))) {
      throw ParseError("exponent too large", exp.offset);
    }
    auto e = static_cast<unsigned>(*value.to_int64());
    Polynomial result = Polynomial::constant(ctx_, 1);
    try {
      for (unsigned k = 0; k < e; ++k) result = result * base;
    } catch (const DomainError& err) {
      throw ParseError(err.what(), exp.offset);
    }
    return result;
  }

  Polynomial primary() {
    const Token& tok = next();
    switch (tok.kind) {
      case TokenKind::Integer:
        return Polynomial::constant(ctx_, Rational(BigInt::parse(tok.text)));
      case TokenKind::Identifier: {
        auto idx = ctx_.index_of(tok.text);
        if (!idx) throw ParseError("undeclared identifier '" + std::string(tok.text) + "'", tok.offset);
        return Polynomial::variable(ctx_, *idx);
      }
      case TokenKind::LParen: {
        Polynomial inner = expr();
        if (peek().kind != TokenKind::RParen) {
          throw ParseError(std::string("expected ')' but found ") + describe(peek().kind), peek().offset);
        }
        next();
        return inner;
      }
      default:
        throw ParseError(std::string("unexpected ") + describe(tok.kind), tok.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VarContext& ctx_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (digit(c)) {
      while (i < text.size() && digit(text[i])) ++i;
      if (i < text.size() && text[i] == '.') throw ParseError("fractional numbers are not allowed", i);
      if (i < text.size() && ident_start(text[i])) {
        throw ParseError("implicit multiplication is not allowed", i);
      }
      out.push_back({TokenKind::Integer, text.substr(start, i - start), start});
      continue;
    }
    if (ident_start(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({TokenKind::Identifier, text.substr(start, i - start), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, text.substr(i, 1), i});
    ++i;
  }
  out.push_back({TokenKind::End, {}, text.size()});
  return out;
}

Polynomial parse_poly(std::string_view text, const VarContext& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace vfkit
