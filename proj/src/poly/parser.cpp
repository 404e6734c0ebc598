#include "eddefect/poly/parser.hpp"

#include <cctype>

namespace eddefect {

namespace detail {

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
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
      if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          i = j;
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        }
      }
      out.push_back({Token::Number, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      out.push_back({Token::Identifier, std::string(text.substr(start, i - start)), start});
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '/': kind = Token::Slash; break;
      case '^': kind = Token::Caret; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      default:
        throw ParseError(ErrorCategory::SyntaxError, std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

}  // namespace detail

namespace {

using detail::Token;

template <class C>
class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : tokens_(detail::tokenize(text)), ring_(ring) {}

  Polynomial<C> parse() {
    Polynomial<C> p = expression();
    if (peek().kind != Token::End) fail("unexpected token '" + peek().text + "'");
    return p;
  }

 private:
  using Traits = CoeffTraits<C>;

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCategory::SyntaxError, msg, peek().position);
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  // expression := term (('+'|'-') term)*
  Polynomial<C> expression() {
    Polynomial<C> acc = term();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      bool minus = next().kind == Token::Minus;
      Polynomial<C> rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  // term := unary (('*'|'/') unary)*
  Polynomial<C> term() {
    Polynomial<C> acc = unary();
    while (peek().kind == Token::Star || peek().kind == Token::Slash) {
      bool divide = next().kind == Token::Slash;
      std::size_t at = peek().position;
      Polynomial<C> rhs = unary();
      if (divide) {
        if (!rhs.is_constant() || rhs.is_zero()) {
          throw ParseError(ErrorCategory::SyntaxError, "divisor must be a nonzero constant", at);
        }
        acc = acc.scaled(Traits::one(*ring_) / rhs.constant_term());
      } else {
        acc = acc * rhs;
      }
    }
    // juxtaposition such as "2x" or "x y" lands here as an unconsumed operand
    auto k = peek().kind;
    if (k == Token::Number || k == Token::Identifier || k == Token::LParen) {
      fail("implicit multiplication is not allowed; use '*'");
    }
    return acc;
  }

  // unary := ('+'|'-') unary | power
  Polynomial<C> unary() {
    if (peek().kind == Token::Minus) {
      ++pos_;
      return -unary();
    }
    if (peek().kind == Token::Plus) {
      ++pos_;
      return unary();
    }
    return power();
  }

  // power := atom ('^' integer)?
  Polynomial<C> power() {
    Polynomial<C> base = atom();
    if (peek().kind == Token::Caret) {
      ++pos_;
      const Token& e = peek();
      if (e.kind != Token::Number || e.text.find_first_not_of("0123456789") != std::string::npos) {
        fail("exponent must be a non-negative integer literal");
      }
      ++pos_;
      unsigned long exponent = std::stoul(e.text);
      if (exponent > 65535) {
        throw ParseError(ErrorCategory::SyntaxError, "exponent too large", e.position);
      }
      return pow(base, static_cast<unsigned>(exponent));
    }
    return base;
  }

  Polynomial<C> atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Number: {
        ++pos_;
        mpq_class q;
        try {
          q = parse_rational_literal(tok.text);
        } catch (const Error& e) {
          throw ParseError(ErrorCategory::SyntaxError, e.what(), tok.position);
        }
        return Polynomial<C>::constant(ring_, Traits::from_rational(q, *ring_));
      }
      case Token::Identifier: {
        ++pos_;
        if (auto idx = ring_->index_of(tok.text)) return Polynomial<C>::variable(ring_, *idx);
        if (tok.text == "I") {
          auto i = Traits::imaginary_unit(*ring_);
          if (!i) {
            throw ParseError(ErrorCategory::NotExact, "imaginary unit not available in " +
                                                          eddefect::to_string(ring_->domain()),
                             tok.position);
          }
          return Polynomial<C>::constant(ring_, *i);
        }
        if (tok.text == "sqrt") {
          expect(Token::LParen, "'(' after sqrt");
          std::size_t at = peek().position;
          Polynomial<C> arg = expression();
          expect(Token::RParen, "')'");
          if (!arg.is_constant()) {
            throw ParseError(ErrorCategory::SyntaxError, "sqrt needs a constant argument", at);
          }
          auto root = Traits::sqrt(arg.constant_term());
          if (!root) {
            throw ParseError(ErrorCategory::NotExact, "sqrt has no exact value in " +
                                                          eddefect::to_string(ring_->domain()),
                             at);
          }
          return Polynomial<C>::constant(ring_, *root);
        }
        throw ParseError(ErrorCategory::UnknownVariable, "unknown variable '" + tok.text + "'", tok.position);
      }
      case Token::LParen: {
        ++pos_;
        Polynomial<C> inner = expression();
        expect(Token::RParen, "')'");
        return inner;
      }
      default:
        fail(tok.kind == Token::End ? "unexpected end of input" : "unexpected token '" + tok.text + "'");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  RingPtr ring_;
};

}  // namespace

template <class C>
Polynomial<C> parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser<C>(text, ring).parse();
}

template Polynomial<GaussianRational> parse_polynomial(std::string_view, const RingPtr&);
template Polynomial<Fp> parse_polynomial(std::string_view, const RingPtr&);
template Polynomial<Complex> parse_polynomial(std::string_view, const RingPtr&);

}  // namespace eddefect
