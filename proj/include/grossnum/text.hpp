#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "grossnum/gross_number.hpp"

namespace grossnum {

// Text format for gross-numbers. Grossone is written "G" in ASCII; the
// Unicode circled-one is accepted everywhere "G" is. The grammar is
// documented in FORMAT.md.

enum class TokenKind { Number, Grossone, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

const char* token_kind_name(TokenKind k);

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the source text
};

// Throws SyntaxError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view text);

// Expression tree over rational literals, the grossone symbol, unary minus,
// and the five binary operators.
struct SourceExpr {
    enum class Kind { Number, Grossone, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    Rational value;  // Kind::Number only
    std::unique_ptr<SourceExpr> lhs;
    std::unique_ptr<SourceExpr> rhs;  // null for Neg
    std::size_t position = 0;
};

using ExprPtr = std::unique_ptr<SourceExpr>;

// Recursive descent, standard precedence: ^ over unary minus over * / over
// + -; ^ is right-associative. Throws SyntaxError.
ExprPtr parse(std::string_view text);

// Bottom-up evaluation; division runs with the given truncation budget.
GrossNumber eval(const SourceExpr& expr, int div_budget = kDefaultDivTerms);

inline GrossNumber eval_text(std::string_view text, int div_budget = kDefaultDivTerms) {
    return eval(*parse(text), div_budget);
}

struct PrintOptions {
    bool unicode = false;  // emit the circled-one symbol instead of "G"
};

// Canonical form: terms in decreasing exponent order, coefficient 1
// suppressed before G, exponents 1 and 0 elided, fractional or negative
// exponents parenthesized. eval(parse(print(x))) == x for every value.
std::string print(const GrossNumber& x, const PrintOptions& opts = {});

std::ostream& operator<<(std::ostream& os, const GrossNumber& x);
std::ostream& operator<<(std::ostream& os, Ordering o);

}  // namespace grossnum
