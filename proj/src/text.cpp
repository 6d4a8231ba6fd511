#include "grossnum/text.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace grossnum {

namespace {

constexpr std::string_view kGrossoneUtf8 = "\xe2\x91\xa0";  // circled digit one

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Number: return "Number";
        case TokenKind::Grossone: return "Grossone";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        default: return "end of input";
    }
}

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
        if (is_digit(c)) {
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i < text.size() && text[i] == '.') {
                ++i;
                if (i >= text.size() || !is_digit(text[i]))
                    throw SyntaxError(i, {"digit"}, "expected digit after decimal point");
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            out.push_back({TokenKind::Number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (c == 'G') {
            out.push_back({TokenKind::Grossone, "G", start});
            ++i;
            continue;
        }
        if (text.substr(i, kGrossoneUtf8.size()) == kGrossoneUtf8) {
            out.push_back({TokenKind::Grossone, std::string(kGrossoneUtf8), start});
            i += kGrossoneUtf8.size();
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
                throw SyntaxError(start, {}, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), start});
        ++i;
    }
    out.push_back({TokenKind::End, "", text.size()});
    return out;
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | power
// power  := primary ('^' unary)?
// primary:= Number | Grossone | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ExprPtr run() {
        ExprPtr e = expr();
        expect(TokenKind::End);
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_++]; }
    bool match(TokenKind k) {
        if (peek().kind != k) return false;
        ++pos_;
        return true;
    }
    void expect(TokenKind k) {
        if (!match(k))
            throw SyntaxError(peek().position, {token_kind_name(k)},
                              std::string("expected ") + token_kind_name(k) + ", found " +
                                  token_kind_name(peek().kind));
    }

    static ExprPtr make(SourceExpr::Kind kind, std::size_t pos, ExprPtr lhs = nullptr,
                        ExprPtr rhs = nullptr) {
        auto e = std::make_unique<SourceExpr>();
        e->kind = kind;
        e->position = pos;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == TokenKind::Plus || peek().kind == TokenKind::Minus) {
            Token op = next();
            ExprPtr rhs = term();
            lhs = make(op.kind == TokenKind::Plus ? SourceExpr::Kind::Add : SourceExpr::Kind::Sub,
                       op.position, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == TokenKind::Star || peek().kind == TokenKind::Slash) {
            Token op = next();
            ExprPtr rhs = unary();
            lhs = make(op.kind == TokenKind::Star ? SourceExpr::Kind::Mul : SourceExpr::Kind::Div,
                       op.position, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == TokenKind::Minus) {
            Token op = next();
            return make(SourceExpr::Kind::Neg, op.position, unary());
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (peek().kind == TokenKind::Caret) {
            Token op = next();
            // Right operand at unary level, so "2^-1" and "2^3^2" work.
            ExprPtr exp = unary();
            return make(SourceExpr::Kind::Pow, op.position, std::move(base), std::move(exp));
        }
        return base;
    }

    ExprPtr primary() {
        const Token& t = peek();
        switch (t.kind) {
            case TokenKind::Number: {
                auto value = Rational::from_numeral(t.lexeme);
                if (!value)
                    throw SyntaxError(t.position, {"Number"}, "malformed numeral " + t.lexeme);
                ExprPtr e = make(SourceExpr::Kind::Number, t.position);
                e->value = *value;
                next();
                return e;
            }
            case TokenKind::Grossone: {
                ExprPtr e = make(SourceExpr::Kind::Grossone, t.position);
                next();
                return e;
            }
            case TokenKind::LParen: {
                next();
                ExprPtr e = expr();
                expect(TokenKind::RParen);
                return e;
            }
            default:
                throw SyntaxError(t.position,
                                  {token_kind_name(TokenKind::Number),
                                   token_kind_name(TokenKind::Grossone),
                                   token_kind_name(TokenKind::LParen),
                                   token_kind_name(TokenKind::Minus)},
                                  std::string("expected a value, found ") +
                                      token_kind_name(t.kind));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) {
    return Parser(text).run();
}

GrossNumber eval(const SourceExpr& expr, int div_budget) {
    switch (expr.kind) {
        case SourceExpr::Kind::Number: return GrossNumber(expr.value);
        case SourceExpr::Kind::Grossone: return GrossNumber::grossone();
        case SourceExpr::Kind::Neg: return -eval(*expr.lhs, div_budget);
        case SourceExpr::Kind::Add: return eval(*expr.lhs, div_budget) + eval(*expr.rhs, div_budget);
        case SourceExpr::Kind::Sub: return eval(*expr.lhs, div_budget) - eval(*expr.rhs, div_budget);
        case SourceExpr::Kind::Mul: return eval(*expr.lhs, div_budget) * eval(*expr.rhs, div_budget);
        case SourceExpr::Kind::Div:
            return div(eval(*expr.lhs, div_budget), eval(*expr.rhs, div_budget), div_budget);
        default:
            return pow(eval(*expr.lhs, div_budget), eval(*expr.rhs, div_budget));
    }
}

namespace {

std::string exponent_str(const Rational& e) {
    if (e.is_integer() && !e.is_negative()) return e.str();
    return "(" + e.str() + ")";
}

}  // namespace

std::string print(const GrossNumber& x, const PrintOptions& opts) {
    if (x.is_zero()) return "0";
    const std::string gross = opts.unicode ? std::string(kGrossoneUtf8) : "G";
    std::string out;
    bool first = true;
    for (const auto& t : x.terms()) {
        bool negative = t.coefficient.is_negative();
        Rational mag = t.coefficient.abs();
        std::string body;
        if (t.exponent.is_zero()) {
            body = mag.str();
        } else {
            if (mag != Rational(1)) body = mag.str() + "*";
            body += gross;
            if (t.exponent != Rational(1)) body += "^" + exponent_str(t.exponent);
        }
        if (first) {
            out = (negative ? "-" : "") + body;
            first = false;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GrossNumber& x) {
    return os << print(x);
}

std::ostream& operator<<(std::ostream& os, Ordering o) {
    return os << ordering_symbol(o);
}

}  // namespace grossnum
