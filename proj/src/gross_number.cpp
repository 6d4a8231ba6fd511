#include "grossnum/gross_number.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace grossnum {

namespace {

// Repeated-squaring iteration cap; beyond this the exact expansion would be
// astronomically large anyway.
constexpr long kMaxExpandedPower = 1000000;

}  // namespace

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::Zero: return "Zero";
        case Classification::Infinitesimal: return "Infinitesimal";
        case Classification::Finite: return "Finite";
        default: return "Infinite";
    }
}

GrossNumber GrossNumber::from_terms(std::vector<GrossTerm> raw) {
    std::sort(raw.begin(), raw.end(), [](const GrossTerm& a, const GrossTerm& b) {
        return a.exponent > b.exponent;
    });
    GrossNumber out;
    for (auto& t : raw) {
        if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
            out.terms_.back().coefficient += t.coefficient;
            if (out.terms_.back().coefficient.is_zero()) out.terms_.pop_back();
        } else if (!t.coefficient.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

GrossNumber operator-(const GrossNumber& x) {
    GrossNumber out = x;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

GrossNumber operator+(const GrossNumber& a, const GrossNumber& b) {
    // Merge of two canonical lists.
    GrossNumber out;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() || ib != b.terms_.end()) {
        if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->exponent > ib->exponent)) {
            out.terms_.push_back(*ia++);
        } else if (ia == a.terms_.end() || ib->exponent > ia->exponent) {
            out.terms_.push_back(*ib++);
        } else {
            Rational c = ia->coefficient + ib->coefficient;
            if (!c.is_zero()) out.terms_.push_back({ia->exponent, c});
            ++ia, ++ib;
        }
    }
    return out;
}

GrossNumber operator-(const GrossNumber& a, const GrossNumber& b) {
    return a + (-b);
}

GrossNumber operator*(const GrossNumber& a, const GrossNumber& b) {
    std::vector<GrossTerm> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            raw.push_back({ta.exponent + tb.exponent, ta.coefficient * tb.coefficient});
        }
    }
    return GrossNumber::from_terms(std::move(raw));
}

GrossNumber operator/(const GrossNumber& a, const GrossNumber& b) {
    return div(a, b);
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b) { return a + b; }
GrossNumber mul(const GrossNumber& a, const GrossNumber& b) { return a * b; }

Ordering compare(const GrossNumber& a, const GrossNumber& b) {
    int s = (a - b).sign();
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

Classification classify(const GrossNumber& x) {
    if (x.is_zero()) return Classification::Zero;
    int s = x.terms().front().exponent.sign();
    if (s > 0) return Classification::Infinite;
    if (s < 0) return Classification::Infinitesimal;
    return Classification::Finite;
}

Parts parts(const GrossNumber& x) {
    Parts out;
    std::vector<GrossTerm> inf, fin, eps;
    for (const auto& t : x.terms()) {
        int s = t.exponent.sign();
        if (s > 0) inf.push_back(t);
        else if (s == 0) fin.push_back(t);
        else eps.push_back(t);
    }
    out.infinite = GrossNumber::from_terms(std::move(inf));
    out.finite = GrossNumber::from_terms(std::move(fin));
    out.infinitesimal = GrossNumber::from_terms(std::move(eps));
    return out;
}

DivisionResult divide(const GrossNumber& a, const GrossNumber& b, int max_terms) {
    if (b.is_zero()) throw DivisionByZero();
    if (max_terms < 1) throw std::invalid_argument("divide: max_terms must be positive");

    const GrossTerm& lead_b = b.terms().front();
    std::vector<GrossTerm> quotient;
    GrossNumber remainder = a;
    while (!remainder.is_zero() && static_cast<int>(quotient.size()) < max_terms) {
        const GrossTerm& lead_r = remainder.terms().front();
        GrossTerm t{lead_r.exponent - lead_b.exponent, lead_r.coefficient / lead_b.coefficient};
        remainder = remainder - GrossNumber(t.coefficient, t.exponent) * b;
        // Leading exponents strictly decrease, so appending keeps the
        // quotient canonical.
        quotient.push_back(std::move(t));
    }
    return {GrossNumber::from_terms(std::move(quotient)), std::move(remainder)};
}

InexactDivision::InexactDivision(GrossNumber quotient, GrossNumber remainder)
    : GrossError("InexactDivision",
                 "division did not terminate within the term budget"),
      quotient_(std::move(quotient)),
      remainder_(std::move(remainder)) {}

GrossNumber div(const GrossNumber& a, const GrossNumber& b, int max_terms) {
    DivisionResult r = divide(a, b, max_terms);
    if (!r.exact()) throw InexactDivision(std::move(r.quotient), std::move(r.remainder));
    return r.quotient;
}

namespace {

GrossNumber pow_nonneg_integer(const GrossNumber& base, unsigned long e) {
    GrossNumber acc(1);
    GrossNumber sq = base;
    while (e != 0) {
        if (e & 1) acc = acc * sq;
        e >>= 1;
        if (e != 0) sq = sq * sq;
    }
    return acc;
}

GrossNumber pow_integer(const GrossNumber& base, const Integer& e) {
    if (base.term_count() == 1) {
        // (c*G^p)^e = c^e * G^(p*e); exact for any integer e the coefficient
        // power can absorb.
        const GrossTerm& t = base.terms().front();
        Rational new_exp = t.exponent * Rational(e);
        Rational c = t.coefficient;
        if (c == Rational(1)) return GrossNumber(Rational(1), new_exp);
        if (c == Rational(-1)) {
            bool odd = mpz_odd_p(e.get_mpz_t()) != 0;
            return GrossNumber(Rational(odd ? -1 : 1), new_exp);
        }
        if (!e.fits_slong_p())
            throw NotRepresentable("integer exponent too large for exact expansion");
        return GrossNumber(c.pow(e.get_si()), new_exp);
    }
    if (!e.fits_slong_p() || abs(e) > kMaxExpandedPower)
        throw NotRepresentable("integer exponent too large for exact expansion");
    long n = e.get_si();
    GrossNumber p = pow_nonneg_integer(base, n < 0 ? -static_cast<unsigned long>(n)
                                                   : static_cast<unsigned long>(n));
    if (n >= 0) return p;
    return div(GrossNumber(1), p);  // may raise InexactDivision for multi-term bases
}

GrossNumber pow_rational(const GrossNumber& base, const Rational& e) {
    // Fractional exponent: only single terms with coefficients that have an
    // exact rational root stay inside the representation.
    if (base.term_count() != 1)
        throw NotRepresentable("fractional power of a multi-term value");
    const GrossTerm& t = base.terms().front();
    Integer den = e.den();
    if (!den.fits_ulong_p())
        throw NotRepresentable("fractional exponent too fine for exact roots");
    auto root = t.coefficient.root(den.get_ui());
    if (!root)
        throw NotRepresentable("coefficient " + t.coefficient.str() +
                               " has no exact rational root of index " + den.get_str());
    Integer num = e.num();
    if (!num.fits_slong_p())
        throw NotRepresentable("exponent numerator too large for exact expansion");
    return GrossNumber(root->pow(num.get_si()), t.exponent * e);
}

}  // namespace

GrossNumber pow(const GrossNumber& base, const GrossNumber& exponent) {
    if (exponent.is_zero()) {
        if (base.is_zero()) throw IndeterminatePower();
        return GrossNumber(1);
    }
    if (base == GrossNumber(1)) return GrossNumber(1);  // 1^x = 1, including x = G
    if (base.is_zero()) {
        if (exponent.sign() > 0) return GrossNumber(0);  // 0^x = 0 for x > 0, including 0^G
        throw ZeroToNegativePower();
    }
    if (!exponent.is_finite_rational())
        throw NotRepresentable("power with infinite or infinitesimal exponent "
                               "is outside the finite-sum-of-terms form");
    Rational e = exponent.finite_value();
    if (e.is_integer()) return pow_integer(base, e.num());
    return pow_rational(base, e);
}

}  // namespace grossnum
