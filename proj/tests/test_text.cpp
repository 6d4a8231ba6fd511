#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "generators.hpp"
#include "grossnum/text.hpp"

using namespace grossnum;
using testgen::Gen;

namespace {

const GrossNumber G = GrossNumber::grossone();

GrossNumber mono(long c, long num, long den = 1) {
    return GrossNumber(Rational(c), Rational(num, den));
}

}  // namespace

TEST_CASE("tokenizer kinds and byte positions") {
    auto tokens = tokenize("12 + G^(-1)");
    REQUIRE(tokens.size() == 9);  // includes End
    CHECK(tokens[0].kind == TokenKind::Number);
    CHECK(tokens[0].lexeme == "12");
    CHECK(tokens[0].position == 0);
    CHECK(tokens[1].kind == TokenKind::Plus);
    CHECK(tokens[1].position == 3);
    CHECK(tokens[2].kind == TokenKind::Grossone);
    CHECK(tokens[3].kind == TokenKind::Caret);
    CHECK(tokens[4].kind == TokenKind::LParen);
    CHECK(tokens[5].kind == TokenKind::Minus);
    CHECK(tokens[6].kind == TokenKind::Number);
    CHECK(tokens[7].kind == TokenKind::RParen);
    CHECK(tokens[8].kind == TokenKind::End);

    auto unicode = tokenize("\xe2\x91\xa0 + 1");
    CHECK(unicode[0].kind == TokenKind::Grossone);
    CHECK(unicode[1].position == 4);  // byte offset, after the 3-byte symbol
}

TEST_CASE("evaluation of the worked expression") {
    GrossNumber v = eval_text("3*G^2 - (G - 1)");
    CHECK(v == mono(3, 2) + mono(-1, 1) + GrossNumber(1));
    CHECK(compare(v, GrossNumber(0)) == Ordering::Greater);
    CHECK(print(v) == "3*G^2 - G + 1");
}

TEST_CASE("evaluation basics") {
    CHECK(eval_text("G/G") == GrossNumber(1));
    CHECK(eval_text("\xe2\x91\xa0 - \xe2\x91\xa0") == GrossNumber(0));
    CHECK(eval_text("2+3*4") == GrossNumber(14));
    CHECK(eval_text("(2+3)*4") == GrossNumber(20));
    CHECK(eval_text("1/2*G") == mono(1, 1) / GrossNumber(2));
    CHECK(eval_text("0.25") == GrossNumber(Rational(1, 4)));
    CHECK(eval_text("0.5*G^2") == mono(1, 2) / GrossNumber(2));
    CHECK(eval_text("2^-2") == GrossNumber(Rational(1, 4)));
    CHECK(eval_text("-2^2") == GrossNumber(-4));
    CHECK(eval_text("2^3^2") == GrossNumber(512));  // right-associative
    CHECK(eval_text("--3") == GrossNumber(3));
    CHECK(eval_text("G^0") == GrossNumber(1));
    CHECK(eval_text("G^(1/2)") == mono(1, 1, 2));
}

TEST_CASE("division budget is honored") {
    CHECK_THROWS_AS((void)eval_text("1/(G+1)", 3), InexactDivision);
    CHECK(eval_text("(G^2-1)/(G-1)") == G + GrossNumber(1));
}

TEST_CASE("printer canonical forms") {
    CHECK(print(GrossNumber(0)) == "0");
    CHECK(print(GrossNumber(-7)) == "-7");
    CHECK(print(G) == "G");
    CHECK(print(-G) == "-G");
    CHECK(print(mono(1, -1, 2)) == "G^(-1/2)");
    CHECK(print(mono(-1, -1)) == "-G^(-1)");
    CHECK(print(mono(1, 2) * GrossNumber(Rational(1, 2))) == "1/2*G^2");
    CHECK(print(mono(3, 2) + mono(-1, 1) + GrossNumber(1)) == "3*G^2 - G + 1");
    CHECK(print(G + GrossNumber(Rational(-5, 3))) == "G - 5/3");
    CHECK(print(mono(2, 1) + GrossNumber(1), {.unicode = true}) ==
          "2*\xe2\x91\xa0 + 1");
}

TEST_CASE("syntax errors carry positions and expectations") {
    auto check_pos = [](const char* text, std::size_t pos) {
        try {
            (void)parse(text);
            FAIL("expected SyntaxError for ", text);
        } catch (const SyntaxError& e) {
            CHECK(e.position() == pos);
        }
    };
    check_pos("2*/3", 2);
    check_pos("(G", 2);
    check_pos("", 0);
    check_pos("2**3", 2);
    check_pos("2 G", 2);  // implicit multiplication is rejected
    check_pos("1 + $", 4);
    check_pos("2.", 2);

    try {
        (void)parse("2*");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK_FALSE(e.expected().empty());
    }
}

TEST_CASE("parse/print round-trip on random values") {
    Gen gen(10203040);
    for (int i = 0; i < 400; ++i) {
        GrossNumber x = gen.number();
        std::string ascii = print(x);
        CHECK(eval_text(ascii) == x);
        CHECK(print(eval_text(ascii)) == ascii);  // printing is deterministic

        std::string fancy = print(x, {.unicode = true});
        CHECK(eval_text(fancy) == x);
    }
}

TEST_CASE("tokenizer totality: garbage either parses or raises SyntaxError") {
    Gen gen(99999);
    const std::string alphabet = "0123456789G+-*/^(). ";
    for (int i = 0; i < 500; ++i) {
        std::string text;
        long len = gen.integer(0, 12);
        for (long j = 0; j < len; ++j)
            text += alphabet[static_cast<std::size_t>(
                gen.integer(0, static_cast<long>(alphabet.size()) - 1))];
        try {
            (void)eval_text(text, 4);
        } catch (const GrossError&) {
            // any domain error is acceptable; crashes and non-domain
            // exceptions are not
        }
    }
}
