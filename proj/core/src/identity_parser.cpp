#include "loopkit/identity_parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {

enum class Tok { Var, One, Star, Backslash, Slash, LParen, RParen, Rho, Lambda, Equals, End };

struct Token {
  Tok kind;
  std::size_t pos;
  char name = 0;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Var: return "variable";
    case Tok::One: return "'1'";
    case Tok::Star: return "'*'";
    case Tok::Backslash: return "'\\'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Rho: return "'^rho'";
    case Tok::Lambda: return "'^lambda'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t pos = i;
    switch (c) {
      case '*': out.push_back({Tok::Star, pos}); ++i; continue;
      case '\\': out.push_back({Tok::Backslash, pos}); ++i; continue;
      case '/': out.push_back({Tok::Slash, pos}); ++i; continue;
      case '(': out.push_back({Tok::LParen, pos}); ++i; continue;
      case ')': out.push_back({Tok::RParen, pos}); ++i; continue;
      case '=': out.push_back({Tok::Equals, pos}); ++i; continue;
      case '1': out.push_back({Tok::One, pos}); ++i; continue;
      default: break;
    }
    if (c == '^') {
      if (text.substr(i + 1, 3) == "rho") {
        out.push_back({Tok::Rho, pos});
        i += 4;
        continue;
      }
      if (text.substr(i + 1, 6) == "lambda") {
        out.push_back({Tok::Lambda, pos});
        i += 7;
        continue;
      }
      throw ParseError(ParseError::Kind::UnknownToken, pos, "unknown token: expected '^rho' or '^lambda'");
    }
    if (std::isalpha(static_cast<unsigned char>(c)) && c >= 0) {
      out.push_back({Tok::Var, pos, c});
      ++i;
      continue;
    }
    throw ParseError(ParseError::Kind::UnknownToken, pos, std::string("unknown token: character '") + c + "'");
  }
  out.push_back({Tok::End, text.size()});
  return out;
}

// Parenthesis balance is checked per side before the grammar so that an
// unclosed '(' is reported as such rather than as an unexpected '='.
void check_balance(const std::vector<Token>& tokens) {
  std::vector<std::size_t> open;
  for (const auto& t : tokens) {
    if (t.kind == Tok::LParen) {
      open.push_back(t.pos);
    } else if (t.kind == Tok::RParen) {
      if (open.empty()) throw ParseError(ParseError::Kind::UnbalancedParentheses, t.pos, "unbalanced parentheses: unmatched ')'");
      open.pop_back();
    } else if (t.kind == Tok::Equals || t.kind == Tok::End) {
      if (!open.empty()) throw ParseError(ParseError::Kind::UnbalancedParentheses, open.back(), "unbalanced parentheses: unclosed '('");
    }
  }
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Term expr() {
    Term acc = postfix();
    for (;;) {
      const Tok k = peek().kind;
      if (k != Tok::Star && k != Tok::Backslash && k != Tok::Slash) return acc;
      ++cur_;
      Term rhs = postfix();
      if (k == Tok::Star) acc = Term::mul(std::move(acc), std::move(rhs));
      else if (k == Tok::Backslash) acc = Term::ldiv(std::move(acc), std::move(rhs));
      else acc = Term::rdiv(std::move(acc), std::move(rhs));
    }
  }

  void expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind));
    ++cur_;
  }

  const Token& peek() const { return tokens_[cur_]; }

 private:
  Term postfix() {
    Term t = primary();
    for (;;) {
      if (peek().kind == Tok::Rho) {
        ++cur_;
        t = Term::rho(std::move(t));
      } else if (peek().kind == Tok::Lambda) {
        ++cur_;
        t = Term::lambda(std::move(t));
      } else {
        return t;
      }
    }
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Var:
        ++cur_;
        return Term::var(t.name);
      case Tok::One:
        ++cur_;
        return Term::one();
      case Tok::LParen: {
        ++cur_;
        Term inner = expr();
        expect(Tok::RParen);
        return inner;
      }
      default:
        fail(std::string("expected a term, found ") + describe(t.kind));
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::SyntaxError, peek().pos, message);
  }

  std::vector<Token> tokens_;
  std::size_t cur_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view text) {
  auto tokens = tokenize(text);
  check_balance(tokens);
  Parser p(std::move(tokens));
  Term lhs = p.expr();
  p.expect(Tok::Equals);
  Term rhs = p.expr();
  p.expect(Tok::End);
  return make_identity(std::move(lhs), std::move(rhs));
}

Term parse_term(std::string_view text) {
  auto tokens = tokenize(text);
  check_balance(tokens);
  Parser p(std::move(tokens));
  Term t = p.expr();
  p.expect(Tok::End);
  return t;
}

}  // namespace loopkit
