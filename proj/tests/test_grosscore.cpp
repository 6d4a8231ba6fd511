#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "generators.hpp"
#include "grossnum/gross_number.hpp"

using namespace grossnum;
using testgen::Gen;

namespace {

const GrossNumber G = GrossNumber::grossone();

// Builds a value from (exponent, coefficient) integer pairs.
GrossNumber gn(std::vector<std::pair<long, long>> pairs) {
    std::vector<GrossTerm> terms;
    for (auto& [p, c] : pairs) terms.push_back({Rational(p), Rational(c)});
    return GrossNumber::from_terms(std::move(terms));
}

// Independent multiplication oracle: brute-force convolution into a map, no
// reuse of the library's normalization.
GrossNumber mul_oracle(const GrossNumber& a, const GrossNumber& b) {
    std::map<Rational, Rational> acc;
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            acc[ta.exponent + tb.exponent] += ta.coefficient * tb.coefficient;
    std::vector<GrossTerm> terms;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!it->second.is_zero()) terms.push_back({it->first, it->second});
    GrossNumber out = GrossNumber::from_terms(terms);
    // from_terms only has to sort here; the map already merged duplicates
    REQUIRE(out.terms() == terms);
    return out;
}

}  // namespace

TEST_CASE("normalization merges, sorts, and drops zeros") {
    GrossNumber x = gn({{0, 1}, {1, 2}, {0, 4}});
    CHECK(x == gn({{1, 2}, {0, 5}}));
    CHECK(x.terms().size() == 2);
    CHECK(x.terms()[0].exponent == Rational(1));
    CHECK(x.terms()[0].coefficient == Rational(2));

    CHECK(gn({{3, 1}, {3, -1}}).is_zero());
    CHECK(GrossNumber::from_terms({}).is_zero());
    CHECK(GrossNumber(Rational(0), Rational(5)).is_zero());
}

TEST_CASE("identity relations of the infinite unit") {
    CHECK((GrossNumber(0) * G).is_zero());
    CHECK((G * GrossNumber(0)).is_zero());
    CHECK((G - G).is_zero());
    CHECK(G / G == GrossNumber(1));
    CHECK(pow(G, GrossNumber(0)) == GrossNumber(1));
    CHECK(pow(GrossNumber(1), G) == GrossNumber(1));
    CHECK(pow(GrossNumber(0), G) == GrossNumber(0));
}

TEST_CASE("addition examples") {
    CHECK((G + (-G)).is_zero());
    CHECK(gn({{2, 3}}) + gn({{1, -1}, {0, 1}}) == gn({{2, 3}, {1, -1}, {0, 1}}));
}

TEST_CASE("multiplication examples") {
    CHECK(G * gn({{1, 3}, {0, -1}}) == gn({{2, 3}, {1, -1}}));
    GrossNumber product = (G + GrossNumber(1)) * (G - GrossNumber(1));
    CHECK(product == gn({{2, 1}, {0, -1}}));
    CHECK(product == mul_oracle(G + GrossNumber(1), G - GrossNumber(1)));
}

TEST_CASE("division examples") {
    CHECK(G / G == GrossNumber(1));

    GrossNumber q = (gn({{2, 1}}) - GrossNumber(1)) / (G - GrossNumber(1));
    CHECK(q == G + GrossNumber(1));
    CHECK(mul_oracle(q, G - GrossNumber(1)) == gn({{2, 1}, {0, -1}}));

    CHECK(GrossNumber(1) / G == gn({{-1, 1}}));

    CHECK_THROWS_AS((void)div(GrossNumber(1), GrossNumber(0)), DivisionByZero);

    SUBCASE("truncated division reports its partial result") {
        try {
            div(GrossNumber(1), G + GrossNumber(1), 3);
            FAIL("expected InexactDivision");
        } catch (const InexactDivision& e) {
            CHECK(e.quotient() == gn({{-1, 1}, {-2, -1}, {-3, 1}}));
            CHECK(mul(e.quotient(), G + GrossNumber(1)) + e.remainder() == GrossNumber(1));
        }
    }

    SUBCASE("divide never throws and keeps the residual identity") {
        DivisionResult r = divide(GrossNumber(1), G + GrossNumber(1), 3);
        CHECK_FALSE(r.exact());
        CHECK(r.quotient == gn({{-1, 1}, {-2, -1}, {-3, 1}}));
        CHECK(mul(r.quotient, G + GrossNumber(1)) + r.remainder == GrossNumber(1));
    }
}

TEST_CASE("powers") {
    CHECK(pow(gn({{2, 4}}), GrossNumber(Rational(1, 2))) == gn({{1, 2}}));
    CHECK(pow(G + GrossNumber(1), GrossNumber(2)) == gn({{2, 1}, {1, 2}, {0, 1}}));
    CHECK(pow(G, GrossNumber(-2)) == gn({{-2, 1}}));
    CHECK(pow(GrossNumber(Rational(2, 3)), GrossNumber(3)) ==
          GrossNumber(Rational(8, 27)));

    CHECK_THROWS_AS((void)pow(GrossNumber(2), G), NotRepresentable);
    CHECK_THROWS_AS((void)pow(G, G), NotRepresentable);
    CHECK_THROWS_AS((void)pow(G, gn({{-1, 1}})), NotRepresentable);
    CHECK_THROWS_AS((void)pow(GrossNumber(0), GrossNumber(0)), IndeterminatePower);
    CHECK_THROWS_AS((void)pow(GrossNumber(0), GrossNumber(-1)), ZeroToNegativePower);
    CHECK_THROWS_AS((void)pow(GrossNumber(2), GrossNumber(Rational(1, 2))),
                    NotRepresentable);
    CHECK_THROWS_AS((void)pow(G + GrossNumber(1), GrossNumber(Rational(1, 2))),
                    NotRepresentable);

    SUBCASE("rational powers square back") {
        GrossNumber root = pow(gn({{2, 4}}), GrossNumber(Rational(1, 2)));
        CHECK(mul_oracle(root, root) == gn({{2, 4}}));
    }
}

TEST_CASE("comparison examples") {
    Integer big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 100);
    CHECK(compare(G, GrossNumber(Rational(big))) == Ordering::Greater);

    CHECK(compare(gn({{2, 3}}), G - GrossNumber(1)) == Ordering::Greater);
    CHECK(compare(gn({{2, 2}, {0, 1}}), gn({{2, 1}, {1, 11}, {0, 3}})) ==
          Ordering::Greater);
    CHECK(compare(gn({{-1, 1}}), GrossNumber(0)) == Ordering::Greater);
    CHECK(compare(GrossNumber(0), gn({{-1, 1}})) == Ordering::Less);
    CHECK(compare(G, G) == Ordering::Equal);
}

TEST_CASE("parts split by gross-power sign") {
    GrossNumber x = gn({{2, 3}, {1, -1}, {0, 2}, {-1, 5}});
    Parts p = parts(x);
    CHECK(p.infinite == gn({{2, 3}, {1, -1}}));
    CHECK(p.finite == GrossNumber(2));
    CHECK(p.infinitesimal == gn({{-1, 5}}));

    Parts q = parts(gn({{-3, 1}}));
    CHECK(q.infinite.is_zero());
    CHECK(q.finite.is_zero());
    CHECK(q.infinitesimal == gn({{-3, 1}}));
}

TEST_CASE("classification") {
    CHECK(classify(GrossNumber(0)) == Classification::Zero);
    CHECK(classify(G - GrossNumber(5)) == Classification::Infinite);
    CHECK(classify(GrossNumber(2) + gn({{-1, 1}})) == Classification::Finite);
    CHECK(classify(gn({{-1, 1}, {-2, 3}})) == Classification::Infinitesimal);
    CHECK(classify(gn({{-2, -1}})) == Classification::Infinitesimal);
}

TEST_CASE("ring and field laws on random values") {
    Gen gen(20240601);
    for (int i = 0; i < 300; ++i) {
        GrossNumber a = gen.number(), b = gen.number(), c = gen.number();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == mul_oracle(a, b));
        CHECK(a + GrossNumber(0) == a);
        CHECK(a * GrossNumber(1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("total order: trichotomy, transitivity, monotonicity") {
    Gen gen(555001);
    for (int i = 0; i < 300; ++i) {
        GrossNumber a = gen.number(), b = gen.number(), c = gen.number();

        int that_way = compare(b, a) == Ordering::Less    ? 1
                       : compare(b, a) == Ordering::Equal ? 0
                                                          : -1;
        int this_way = compare(a, b) == Ordering::Less    ? -1
                       : compare(a, b) == Ordering::Equal ? 0
                                                          : 1;
        CHECK(this_way == that_way);
        CHECK((compare(a, b) == Ordering::Equal) == (a == b));

        if (a <= b && b <= c) CHECK(a <= c);
        if (a < b) {
            CHECK(a + c < b + c);
            GrossNumber pos = gen.nonzero();
            if (pos.sign() < 0) pos = -pos;
            CHECK(a * pos < b * pos);
        }
    }
}

TEST_CASE("grossone exceeds every finite rational") {
    Gen gen(987);
    for (int i = 0; i < 200; ++i) {
        Rational n = gen.positive_rational();
        CHECK(compare(G, GrossNumber(n)) == Ordering::Greater);
        CHECK(compare(gn({{-1, 1}}), GrossNumber(n)) == Ordering::Less);
    }
}

TEST_CASE("division round-trip and residual identity on random values") {
    Gen gen(424242);
    for (int i = 0; i < 300; ++i) {
        GrossNumber a = gen.number(), b = gen.nonzero();
        CHECK(div(a * b, b) == a);

        DivisionResult r = divide(a, b, 8);
        CHECK(mul(r.quotient, b) + r.remainder == a);
    }
}

TEST_CASE("parts always reassemble") {
    Gen gen(7171);
    for (int i = 0; i < 300; ++i) {
        GrossNumber x = gen.number();
        Parts p = parts(x);
        CHECK(p.infinite + p.finite + p.infinitesimal == x);
        if (!p.infinite.is_zero()) CHECK(classify(p.infinite) == Classification::Infinite);
        if (!p.finite.is_zero()) CHECK(classify(p.finite) == Classification::Finite);
        if (!p.infinitesimal.is_zero())
            CHECK(classify(p.infinitesimal) == Classification::Infinitesimal);
    }
}

TEST_CASE("normalization is idempotent and canonical forms are unique") {
    Gen gen(31337);
    for (int i = 0; i < 300; ++i) {
        GrossNumber x = gen.number();
        CHECK(GrossNumber::from_terms(x.terms()) == x);
        for (std::size_t t = 1; t < x.terms().size(); ++t)
            CHECK(x.terms()[t - 1].exponent > x.terms()[t].exponent);
        for (const auto& term : x.terms()) CHECK_FALSE(term.coefficient.is_zero());
        CHECK((x - x).is_zero());
    }
}

TEST_CASE("integer powers match repeated multiplication") {
    Gen gen(909090);
    for (int i = 0; i < 100; ++i) {
        GrossNumber a = gen.nonzero(3);
        long e = gen.integer(0, 5);
        GrossNumber expect(1);
        for (long j = 0; j < e; ++j) expect = expect * a;
        if (e == 0 && a.is_zero()) continue;
        CHECK(pow(a, GrossNumber(e)) == expect);
    }
}
