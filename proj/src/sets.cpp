#include "grossnum/sets.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace grossnum {

namespace {

GrossNumber grossone() { return GrossNumber::grossone(); }

GrossNumber from_count(unsigned long count) {
    return GrossNumber(Rational(Integer(count)));
}

}  // namespace

const char* cantor_label_name(CantorLabel label) {
    return label == CantorLabel::CountableAleph0 ? "countable, aleph_0" : "continuum, c";
}

// ---------------------------------------------------------------------------
// SetDescriptor

SetDescriptor SetDescriptor::naturals() { return SetDescriptor(Kind::Naturals); }

SetDescriptor SetDescriptor::naturals_minus(std::vector<unsigned long> removed) {
    SetDescriptor d(Kind::NaturalsMinus);
    std::set<unsigned long> seen;
    for (unsigned long v : removed) {
        if (v == 0) throw InvalidDescriptor("0 is not a natural number");
        if (!seen.insert(v).second)
            throw InvalidDescriptor("removed naturals must be distinct");
    }
    d.removed_naturals_ = std::move(removed);
    return d;
}

SetDescriptor SetDescriptor::progression(unsigned long k, unsigned long n) {
    if (k < 1 || k > n)
        throw InvalidDescriptor("progression N(k,n) requires 1 <= k <= n");
    SetDescriptor d(Kind::Progression);
    d.k_ = k;
    d.n_ = n;
    return d;
}

SetDescriptor SetDescriptor::integers() { return SetDescriptor(Kind::Integers); }

SetDescriptor SetDescriptor::integers_minus(std::vector<long> removed) {
    SetDescriptor d(Kind::IntegersMinus);
    std::set<long> seen;
    for (long v : removed) {
        if (!seen.insert(v).second)
            throw InvalidDescriptor("removed integers must be distinct");
    }
    d.removed_integers_ = std::move(removed);
    return d;
}

SetDescriptor SetDescriptor::squares() { return SetDescriptor(Kind::Squares); }
SetDescriptor SetDescriptor::pairs() { return SetDescriptor(Kind::Pairs); }
SetDescriptor SetDescriptor::q1() { return SetDescriptor(Kind::Q1); }
SetDescriptor SetDescriptor::q2() { return SetDescriptor(Kind::Q2); }

SetDescriptor SetDescriptor::power_set(SetDescriptor inner) {
    SetDescriptor d(Kind::PowerSet);
    d.inner_ = std::make_shared<const SetDescriptor>(std::move(inner));
    return d;
}

SetDescriptor SetDescriptor::interval_numerals(unsigned long base, const Rational& lower,
                                               const Rational& upper, bool closed_upper) {
    if (base < 2) throw InvalidDescriptor("numeral base must be at least 2");
    if (!(lower < upper)) throw InvalidDescriptor("interval requires lower < upper");
    SetDescriptor d(Kind::IntervalNumerals);
    d.base_ = base;
    d.lower_ = lower;
    d.upper_ = upper;
    d.closed_upper_ = closed_upper;
    return d;
}

SetDescriptor SetDescriptor::disjoint_union(std::vector<SetDescriptor> members) {
    if (members.empty()) throw InvalidDescriptor("union of no sets");
    std::set<unsigned long> residues;
    unsigned long n = 0;
    for (const auto& m : members) {
        if (m.kind() != Kind::Progression)
            throw InvalidDescriptor("only progressions may be unioned");
        if (n == 0) n = m.modulus();
        if (m.modulus() != n)
            throw InvalidDescriptor("unioned progressions must share one modulus");
        if (!residues.insert(m.residue()).second)
            throw InvalidDescriptor("unioned progressions must have distinct residues");
    }
    SetDescriptor d(Kind::DisjointUnion);
    d.members_ = std::move(members);
    return d;
}

SetDescriptor SetDescriptor::minus_elements(SetDescriptor inner, unsigned long count) {
    SetDescriptor d(Kind::MinusElements);
    d.inner_ = std::make_shared<const SetDescriptor>(std::move(inner));
    d.count_ = count;
    return d;
}

SetDescriptor SetDescriptor::plus_elements(SetDescriptor inner, unsigned long count) {
    SetDescriptor d(Kind::PlusElements);
    d.inner_ = std::make_shared<const SetDescriptor>(std::move(inner));
    d.count_ = count;
    return d;
}

CantorLabel SetDescriptor::cantor_label() const {
    switch (kind_) {
        case Kind::PowerSet:
        case Kind::IntervalNumerals:
            return CantorLabel::ContinuumC;
        case Kind::MinusElements:
        case Kind::PlusElements:
            return inner_->cantor_label();
        default:
            return CantorLabel::CountableAleph0;
    }
}

std::string SetDescriptor::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Naturals: return "N";
        case Kind::NaturalsMinus: {
            os << "N \\ {";
            for (std::size_t i = 0; i < removed_naturals_.size(); ++i)
                os << (i ? "," : "") << removed_naturals_[i];
            os << "}";
            return os.str();
        }
        case Kind::Progression:
            os << "N(" << k_ << "," << n_ << ")";
            return os.str();
        case Kind::Integers: return "Z";
        case Kind::IntegersMinus: {
            os << "Z \\ {";
            for (std::size_t i = 0; i < removed_integers_.size(); ++i)
                os << (i ? "," : "") << removed_integers_[i];
            os << "}";
            return os.str();
        }
        case Kind::Squares: return "squares";
        case Kind::Pairs: return "pairs";
        case Kind::Q1: return "Q1";
        case Kind::Q2: return "Q2";
        case Kind::PowerSet: return "P(" + inner_->str() + ")";
        case Kind::IntervalNumerals:
            os << "num[" << lower_.str() << "," << upper_.str()
               << (closed_upper_ ? "]" : ")") << "@" << base_;
            return os.str();
        case Kind::DisjointUnion: {
            os << "U(";
            for (std::size_t i = 0; i < members_.size(); ++i)
                os << (i ? "," : "") << members_[i].str();
            os << ")";
            return os.str();
        }
        case Kind::MinusElements:
            return inner_->str() + " - " + std::to_string(count_);
        default:
            return inner_->str() + " + " + std::to_string(count_);
    }
}

// ---------------------------------------------------------------------------
// Measure

Measure Measure::poly(GrossNumber value, bool floor_annotated) {
    if (value.sign() < 0)
        throw InvalidDescriptor("a set measure cannot be negative");
    Measure m;
    m.value_ = std::move(value);
    m.floor_ = floor_annotated;
    return m;
}

Measure Measure::exp(const Rational& coeff, unsigned long base, GrossNumber exponent,
                     GrossNumber offset) {
    if (coeff.sign() <= 0) throw InvalidDescriptor("exponential coefficient must be positive");
    if (base < 2) throw InvalidDescriptor("exponential base must be at least 2");
    if (classify(exponent) != Classification::Infinite || exponent.sign() <= 0)
        throw InvalidDescriptor("exponential measure requires a positive infinite exponent");
    Measure m;
    m.is_exp_ = true;
    m.coeff_ = coeff;
    m.base_ = base;
    m.exponent_ = std::move(exponent);
    m.offset_ = std::move(offset);
    return m;
}

bool operator==(const Measure& a, const Measure& b) {
    if (a.is_exp_ != b.is_exp_ || a.floor_ != b.floor_) return false;
    if (a.is_exp_)
        return a.coeff_ == b.coeff_ && a.base_ == b.base_ && a.exponent_ == b.exponent_ &&
               a.offset_ == b.offset_;
    return a.value_ == b.value_;
}

std::string Measure::str(const PrintOptions& opts) const {
    if (is_poly()) {
        std::string body = print(value_, opts);
        return floor_ ? "floor(" + body + ")" : body;
    }
    std::string out;
    if (coeff_ != Rational(1)) out += coeff_.str() + "*";
    out += std::to_string(base_);
    out += "^";
    if (exponent_ == GrossNumber::grossone()) {
        out += opts.unicode ? "\xe2\x91\xa0" : "G";
    } else {
        out += "(" + print(exponent_, opts) + ")";
    }
    if (!offset_.is_zero()) {
        if (offset_.sign() > 0)
            out += " + " + print(offset_, opts);
        else
            out += " - " + print(-offset_, opts);
    }
    return out;
}

nlohmann::json Measure::to_json() const {
    nlohmann::json j;
    j["form"] = is_exp_ ? "exp" : "poly";
    if (is_exp_) {
        j["coeff"] = coeff_.str();
        j["base"] = base_;
        j["exponent"] = print(exponent_);
    } else {
        j["coeff"] = nullptr;
        j["base"] = nullptr;
        j["exponent"] = nullptr;
    }
    j["offset"] = print(is_exp_ ? offset_ : value_);
    j["floor"] = floor_;
    return j;
}

Measure Measure::from_json(const nlohmann::json& j) {
    const std::string form = j.at("form").get<std::string>();
    if (form == "poly") {
        return poly(eval_text(j.at("offset").get<std::string>()),
                    j.at("floor").get<bool>());
    }
    if (form != "exp") throw InvalidDescriptor("unknown measure form " + form);
    auto coeff = Rational::from_numeral(j.at("coeff").get<std::string>());
    if (!coeff) throw InvalidDescriptor("malformed measure coefficient");
    return exp(*coeff, j.at("base").get<unsigned long>(),
               eval_text(j.at("exponent").get<std::string>()),
               eval_text(j.at("offset").get<std::string>()));
}

std::ostream& operator<<(std::ostream& os, const Measure& m) {
    return os << m.str();
}

// ---------------------------------------------------------------------------
// Catalog measures

Measure measure(const SetDescriptor& s) {
    using Kind = SetDescriptor::Kind;
    switch (s.kind()) {
        case Kind::Naturals:
            return Measure::poly(grossone());
        case Kind::NaturalsMinus:
            return Measure::poly(grossone() - from_count(s.removed_naturals().size()));
        case Kind::Progression:
            // Each residue class N(k,n) holds G/n elements.
            return Measure::poly(
                GrossNumber(Rational(1, static_cast<long>(s.modulus())), Rational(1)));
        case Kind::Integers:
            return Measure::poly(GrossNumber(2) * grossone() + GrossNumber(1));
        case Kind::IntegersMinus:
            return Measure::poly(GrossNumber(2) * grossone() + GrossNumber(1) -
                                 from_count(s.removed_integers().size()));
        case Kind::Squares:
            return Measure::poly(GrossNumber(Rational(1), Rational(1, 2)), true);
        case Kind::Pairs:
            return Measure::poly(GrossNumber(Rational(1), Rational(2)));
        case Kind::Q1:
            // Numerals p/q with integer p and nonzero integer q: (2G+1)*2G.
            return Measure::poly(GrossNumber(Rational(4), Rational(2)) +
                                 GrossNumber(Rational(2), Rational(1)));
        case Kind::Q2:
            // 0 plus signed pairs of naturals: 2G^2 + 1.
            return Measure::poly(GrossNumber(Rational(2), Rational(2)) + GrossNumber(1));
        case Kind::PowerSet: {
            Measure inner = measure(s.inner());
            if (inner.is_exp())
                throw InvalidDescriptor(
                    "power set of an exponentially measured set has no representable measure");
            if (inner.floor_annotated())
                throw InvalidDescriptor(
                    "power set over a floor-annotated measure is not defined");
            return Measure::exp(Rational(1), 2, inner.value());
        }
        case Kind::IntervalNumerals:
            return Measure::exp(s.upper() - s.lower(), s.base(), grossone(),
                                s.closed_upper() ? GrossNumber(1) : GrossNumber(0));
        case Kind::DisjointUnion: {
            GrossNumber total;
            for (const auto& m : s.members()) total = total + measure(m).value();
            return Measure::poly(std::move(total));
        }
        case Kind::MinusElements:
        case Kind::PlusElements: {
            Measure inner = measure(s.inner());
            GrossNumber delta = from_count(s.count());
            if (s.kind() == Kind::MinusElements) delta = -delta;
            // Integer shifts commute with the floor annotation, so they stay
            // exact even on floor(G^(1/2)).
            if (inner.is_poly())
                return Measure::poly(inner.value() + delta, inner.floor_annotated());
            return Measure::exp(inner.coeff(), inner.base(), inner.exponent(),
                                inner.offset() + delta);
        }
    }
    throw InvalidDescriptor("unknown descriptor");
}

// ---------------------------------------------------------------------------
// Measure comparison

namespace {

Ordering from_sign(int s) {
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

Ordering flip(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return o;
}

// Sign of qa*ln(ba) - qb*ln(bb), decided exactly: clear denominators and
// compare the resulting integer powers ba^ia vs bb^ib as big integers.
Ordering compare_coeff_log(const Rational& qa, unsigned long ba, const Rational& qb,
                           unsigned long bb) {
    int sa = qa.sign(), sb = qb.sign();
    if (sa != sb) return sa < sb ? Ordering::Less : Ordering::Greater;
    if (sa == 0) return Ordering::Equal;

    Integer d;
    mpz_lcm(d.get_mpz_t(), qa.den().get_mpz_t(), qb.den().get_mpz_t());
    Integer ia = abs(qa.num()) * (d / qa.den());
    Integer ib = abs(qb.num()) * (d / qb.den());

    Ordering magnitude;
    if (ba == bb) {
        magnitude = from_sign(cmp(ia, ib));
    } else {
        if (!ia.fits_ulong_p() || !ib.fits_ulong_p())
            throw NotRepresentable("exponent coefficients too large for exact power comparison");
        Integer pa, pb;
        mpz_ui_pow_ui(pa.get_mpz_t(), ba, ia.get_ui());
        mpz_ui_pow_ui(pb.get_mpz_t(), bb, ib.get_ui());
        magnitude = from_sign(cmp(pa, pb));
    }
    return sa > 0 ? magnitude : flip(magnitude);
}

// Lexicographic comparison of Ea*ln(ba) vs Eb*ln(bb) over the merged
// gross-power support, highest power first.
Ordering compare_formal_logs(const GrossNumber& ea, unsigned long ba, const GrossNumber& eb,
                             unsigned long bb) {
    auto ia = ea.terms().begin();
    auto ib = eb.terms().begin();
    const Rational zero(0);
    while (ia != ea.terms().end() || ib != eb.terms().end()) {
        const Rational* qa = &zero;
        const Rational* qb = &zero;
        if (ib == eb.terms().end() ||
            (ia != ea.terms().end() && ia->exponent > ib->exponent)) {
            qa = &ia->coefficient;
            ++ia;
        } else if (ia == ea.terms().end() || ib->exponent > ia->exponent) {
            qb = &ib->coefficient;
            ++ib;
        } else {
            qa = &ia->coefficient;
            qb = &ib->coefficient;
            ++ia, ++ib;
        }
        Ordering s = compare_coeff_log(*qa, ba, *qb, bb);
        if (s != Ordering::Equal) return s;
    }
    return Ordering::Equal;
}

// An annotated measure stores v but denotes floor-of-something in (v-1, v].
// The difference of the two actual values therefore lies in a window around
// d = a.value - b.value; the comparison is answered exactly when the whole
// window has one sign, and refused otherwise.
Ordering compare_poly_measures(const Measure& a, const Measure& b) {
    const GrossNumber d = a.value() - b.value();
    if (a.floor_annotated() == b.floor_annotated()) {
        if (!a.floor_annotated()) return from_sign(d.sign());
        if (d.is_zero()) return Ordering::Equal;  // identical floors
        if (d.is_finite_rational() && d.finite_value().is_integer())
            return from_sign(d.sign());  // integer shifts commute with floor
        // window (d-1, d+1)
        if (d >= GrossNumber(1)) return Ordering::Greater;
        if (d <= GrossNumber(-1)) return Ordering::Less;
    } else if (a.floor_annotated()) {
        // window (d-1, d]
        if (d >= GrossNumber(1)) return Ordering::Greater;
        if (d.sign() < 0) return Ordering::Less;
    } else {
        // window [d, d+1)
        if (d.sign() > 0) return Ordering::Greater;
        if (d <= GrossNumber(-1)) return Ordering::Less;
    }
    throw AmbiguousComparison("floor slack could change the ordering of " + a.str() +
                              " and " + b.str());
}

}  // namespace

Ordering compare_measure(const Measure& a, const Measure& b) {
    if (a.is_poly() && b.is_poly()) return compare_poly_measures(a, b);
    // An infinite exponent dominates any polynomial, floored or not.
    if (a.is_exp() && b.is_poly()) return Ordering::Greater;
    if (a.is_poly() && b.is_exp()) return Ordering::Less;

    Ordering s = compare_formal_logs(a.exponent(), a.base(), b.exponent(), b.base());
    if (s != Ordering::Equal) return s;
    if (a.coeff() != b.coeff()) return a.coeff() < b.coeff() ? Ordering::Less : Ordering::Greater;
    return compare(a.offset(), b.offset());
}

// ---------------------------------------------------------------------------
// Counts and sequence bounds

Measure zero_numeral_count(RationalSystem system) {
    if (system == RationalSystem::Q1) {
        // 0/q for every nonzero integer q: 2G numerals.
        return Measure::poly(GrossNumber(Rational(2), Rational(1)));
    }
    // Q2 lists zero exactly once, as the distinguished numeral "0".
    return Measure::poly(GrossNumber(1));
}

Measure max_sequence_length() {
    return Measure::poly(grossone());
}

bool check_sequence(const GrossNumber& length) {
    if (length.sign() <= 0)
        throw NotAnAdmissibleLength("sequence length must be positive");
    return compare(length, grossone()) != Ordering::Greater;
}

// ---------------------------------------------------------------------------
// Descriptor text grammar (see SETS.md)

namespace {

struct SetToken {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind;
    std::string lexeme;
    std::size_t position;
};

class SetLexer {
public:
    explicit SetLexer(std::string_view text) {
        std::size_t i = 0;
        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isalpha(static_cast<unsigned char>(c))) {
                while (i < text.size() &&
                       std::isalnum(static_cast<unsigned char>(text[i])))
                    ++i;
                tokens_.push_back({SetToken::Kind::Ident,
                                   std::string(text.substr(start, i - start)), start});
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i < text.size() && text[i] == '.') {
                    ++i;
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw SyntaxError(i, {"digit"}, "expected digit after decimal point");
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        ++i;
                }
                tokens_.push_back({SetToken::Kind::Number,
                                   std::string(text.substr(start, i - start)), start});
                continue;
            }
            static const std::string punct = "\\{}(),[]@+-/";
            if (punct.find(c) == std::string::npos)
                throw SyntaxError(start, {}, std::string("unexpected character '") + c + "'");
            tokens_.push_back({SetToken::Kind::Punct, std::string(1, c), start});
            ++i;
        }
        tokens_.push_back({SetToken::Kind::End, "", text.size()});
    }

    std::vector<SetToken> tokens_;
};

class SetParser {
public:
    explicit SetParser(std::string_view text) : tokens_(SetLexer(text).tokens_) {}

    SetDescriptor run() {
        SetDescriptor d = set();
        if (peek().kind != SetToken::Kind::End)
            throw SyntaxError(peek().position, {"end of input"},
                              "unexpected trailing input '" + peek().lexeme + "'");
        return d;
    }

private:
    const SetToken& peek() const { return tokens_[pos_]; }
    SetToken next() { return tokens_[pos_++]; }

    bool match_punct(char c) {
        if (peek().kind == SetToken::Kind::Punct && peek().lexeme[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_punct(char c) {
        if (!match_punct(c))
            throw SyntaxError(peek().position, {std::string("'") + c + "'"},
                              std::string("expected '") + c + "'");
    }

    unsigned long natural() {
        if (peek().kind != SetToken::Kind::Number)
            throw SyntaxError(peek().position, {"Number"}, "expected a number");
        SetToken t = next();
        auto r = Rational::from_numeral(t.lexeme);
        if (!r || !r->is_integer() || !r->num().fits_ulong_p())
            throw SyntaxError(t.position, {"Number"}, "expected a nonnegative integer");
        return r->num().get_ui();
    }

    long integer() {
        bool negative = match_punct('-');
        long v = static_cast<long>(natural());
        return negative ? -v : v;
    }

    Rational bound() {
        bool negative = match_punct('-');
        if (peek().kind != SetToken::Kind::Number)
            throw SyntaxError(peek().position, {"Number"}, "expected a number");
        SetToken t = next();
        std::string lexeme = t.lexeme;
        if (match_punct('/')) {
            if (peek().kind != SetToken::Kind::Number)
                throw SyntaxError(peek().position, {"Number"}, "expected a denominator");
            lexeme += "/" + next().lexeme;
        }
        auto r = Rational::from_numeral(lexeme);
        if (!r) throw SyntaxError(t.position, {"Number"}, "malformed numeral " + lexeme);
        return negative ? -*r : *r;
    }

    SetDescriptor set() {
        SetDescriptor d = primary();
        for (;;) {
            if (match_punct('+'))
                d = SetDescriptor::plus_elements(std::move(d), natural());
            else if (match_punct('-'))
                d = SetDescriptor::minus_elements(std::move(d), natural());
            else
                return d;
        }
    }

    SetDescriptor primary() {
        const SetToken& t = peek();
        if (t.kind != SetToken::Kind::Ident)
            throw SyntaxError(t.position, {"set name"},
                              "expected a set descriptor, found '" + t.lexeme + "'");
        std::string name = next().lexeme;
        if (name == "N") {
            if (match_punct('\\')) {
                expect_punct('{');
                std::vector<unsigned long> removed;
                removed.push_back(natural());
                while (match_punct(',')) removed.push_back(natural());
                expect_punct('}');
                return SetDescriptor::naturals_minus(std::move(removed));
            }
            if (match_punct('(')) {
                unsigned long k = natural();
                expect_punct(',');
                unsigned long n = natural();
                expect_punct(')');
                return SetDescriptor::progression(k, n);
            }
            return SetDescriptor::naturals();
        }
        if (name == "Z") {
            if (match_punct('\\')) {
                expect_punct('{');
                std::vector<long> removed;
                removed.push_back(integer());
                while (match_punct(',')) removed.push_back(integer());
                expect_punct('}');
                return SetDescriptor::integers_minus(std::move(removed));
            }
            return SetDescriptor::integers();
        }
        if (name == "squares") return SetDescriptor::squares();
        if (name == "pairs") return SetDescriptor::pairs();
        if (name == "Q1") return SetDescriptor::q1();
        if (name == "Q2") return SetDescriptor::q2();
        if (name == "P") {
            expect_punct('(');
            SetDescriptor inner = set();
            expect_punct(')');
            return SetDescriptor::power_set(std::move(inner));
        }
        if (name == "U") {
            expect_punct('(');
            std::vector<SetDescriptor> members;
            members.push_back(set());
            while (match_punct(',')) members.push_back(set());
            expect_punct(')');
            return SetDescriptor::disjoint_union(std::move(members));
        }
        if (name == "num") {
            expect_punct('[');
            Rational lower = bound();
            expect_punct(',');
            Rational upper = bound();
            bool closed;
            if (match_punct(']')) closed = true;
            else if (match_punct(')')) closed = false;
            else
                throw SyntaxError(peek().position, {"')'", "']'"},
                                  "expected ')' or ']' to close the interval");
            expect_punct('@');
            unsigned long base = natural();
            return SetDescriptor::interval_numerals(base, lower, upper, closed);
        }
        throw SyntaxError(t.position, {"set name"}, "unknown set '" + name + "'");
    }

    std::vector<SetToken> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

SetDescriptor parse_set(std::string_view text) {
    return SetParser(text).run();
}

}  // namespace grossnum
