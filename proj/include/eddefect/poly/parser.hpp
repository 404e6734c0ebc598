#pragma once

#include <string_view>

#include "eddefect/poly/polynomial.hpp"

namespace eddefect {

namespace detail {

/// Domain-independent token stream shared by every instantiation.
struct Token {
  enum Kind { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End } kind;
  std::string text;
  std::size_t position;
};

std::vector<Token> tokenize(std::string_view text);

}  // namespace detail

/// Parses polynomial text over `ring`.
///
/// Grammar: integers, decimals (`0.25`, `1e-3`), `+ - * / ^`, parentheses,
/// declared variable names, the imaginary unit `I` and `sqrt(c)` of a
/// constant. Juxtaposition (`2x`) is rejected; `/` and `sqrt` need constant
/// operands; `^` needs a non-negative integer literal. `sqrt` is only exact
/// for perfect squares, otherwise NotExact (use a ComplexDouble ring).
///
/// Throws ParseError with category SyntaxError or UnknownVariable.
template <class C>
Polynomial<C> parse_polynomial(std::string_view text, const RingPtr& ring);

extern template Polynomial<GaussianRational> parse_polynomial(std::string_view, const RingPtr&);
extern template Polynomial<Fp> parse_polynomial(std::string_view, const RingPtr&);
extern template Polynomial<Complex> parse_polynomial(std::string_view, const RingPtr&);

}  // namespace eddefect
