#pragma once

#include <vector>

#include "grossnum/errors.hpp"
#include "grossnum/rational.hpp"

namespace grossnum {

enum class Ordering { Less, Equal, Greater };

inline const char* ordering_symbol(Ordering o) {
    switch (o) {
        case Ordering::Less: return "<";
        case Ordering::Equal: return "=";
        default: return ">";
    }
}

enum class Classification { Zero, Infinitesimal, Finite, Infinite };

const char* classification_name(Classification c);

// One term c*G^p of a gross-number, where G stands for grossone. `exponent`
// is the gross-power p, `coefficient` the gross-digit c.
struct GrossTerm {
    Rational exponent;
    Rational coefficient;

    friend bool operator==(const GrossTerm& a, const GrossTerm& b) {
        return a.exponent == b.exponent && a.coefficient == b.coefficient;
    }
};

// A number with (possibly) infinite, finite, and infinitesimal parts: a
// finite sum of terms c*G^p held in canonical form. Invariants: exponents
// strictly decreasing, no zero coefficients, zero is the empty sum. Equal
// values always have identical term lists. Values are immutable once built,
// so they can be shared freely across threads.
class GrossNumber {
public:
    GrossNumber() = default;
    GrossNumber(const Rational& finite) : GrossNumber(finite, Rational(0)) {}  // NOLINT
    GrossNumber(long finite) : GrossNumber(Rational(finite)) {}                // NOLINT
    GrossNumber(int finite) : GrossNumber(Rational(finite)) {}                 // NOLINT

    // c*G^p.
    GrossNumber(const Rational& coefficient, const Rational& exponent) {
        if (!coefficient.is_zero()) terms_.push_back({exponent, coefficient});
    }

    static GrossNumber grossone() { return GrossNumber(Rational(1), Rational(1)); }

    // Canonicalizes an arbitrary term list: merges equal exponents, drops
    // zero coefficients, sorts exponents strictly decreasing.
    static GrossNumber from_terms(std::vector<GrossTerm> raw);

    const std::vector<GrossTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Sign of the value: the sign of the highest-power coefficient.
    int sign() const { return terms_.empty() ? 0 : terms_.front().coefficient.sign(); }

    // True when the value is zero or a single G^0 term, i.e. an ordinary
    // rational.
    bool is_finite_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
    }
    Rational finite_value() const {
        return terms_.empty() ? Rational(0) : terms_.front().coefficient;
    }

    friend GrossNumber operator-(const GrossNumber& x);
    friend GrossNumber operator+(const GrossNumber& a, const GrossNumber& b);
    friend GrossNumber operator-(const GrossNumber& a, const GrossNumber& b);
    friend GrossNumber operator*(const GrossNumber& a, const GrossNumber& b);
    friend GrossNumber operator/(const GrossNumber& a, const GrossNumber& b);

    friend bool operator==(const GrossNumber& a, const GrossNumber& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GrossNumber& a, const GrossNumber& b) {
        return !(a == b);
    }

private:
    std::vector<GrossTerm> terms_;
};

inline GrossNumber normalize(std::vector<GrossTerm> raw) {
    return GrossNumber::from_terms(std::move(raw));
}

GrossNumber add(const GrossNumber& a, const GrossNumber& b);
GrossNumber mul(const GrossNumber& a, const GrossNumber& b);

Ordering compare(const GrossNumber& a, const GrossNumber& b);

inline bool operator<(const GrossNumber& a, const GrossNumber& b) { return compare(a, b) == Ordering::Less; }
inline bool operator>(const GrossNumber& a, const GrossNumber& b) { return compare(a, b) == Ordering::Greater; }
inline bool operator<=(const GrossNumber& a, const GrossNumber& b) { return compare(a, b) != Ordering::Greater; }
inline bool operator>=(const GrossNumber& a, const GrossNumber& b) { return compare(a, b) != Ordering::Less; }

Classification classify(const GrossNumber& x);

// Decomposition by sign of the gross-power. The three pieces always sum back
// to the original value exactly.
struct Parts {
    GrossNumber infinite;       // exponent > 0 terms
    GrossNumber finite;         // exponent = 0 term, or zero
    GrossNumber infinitesimal;  // exponent < 0 terms
};

Parts parts(const GrossNumber& x);

// Default truncation budget for long division (quotients are infinite series
// in general).
inline constexpr int kDefaultDivTerms = 32;

struct DivisionResult {
    GrossNumber quotient;
    GrossNumber remainder;
    bool exact() const { return remainder.is_zero(); }
};

// Long division by leading terms. Stops once the remainder is zero or the
// quotient holds max_terms terms; mul(quotient, b) + remainder == a holds
// either way.
DivisionResult divide(const GrossNumber& a, const GrossNumber& b,
                      int max_terms = kDefaultDivTerms);

class InexactDivision : public GrossError {
public:
    InexactDivision(GrossNumber quotient, GrossNumber remainder);

    const GrossNumber& quotient() const noexcept { return quotient_; }
    const GrossNumber& remainder() const noexcept { return remainder_; }

private:
    GrossNumber quotient_;
    GrossNumber remainder_;
};

// Exact quotient; throws InexactDivision (carrying the partial quotient and
// remainder) when the division does not terminate within max_terms terms.
GrossNumber div(const GrossNumber& a, const GrossNumber& b,
                int max_terms = kDefaultDivTerms);

// Exact power. Supported: integer exponents; rational exponents of single
// terms whose coefficient has an exact rational root; base 0 or 1 with any
// nonzero exponent. Everything else (2^G, G^G, ...) leaves the
// finite-sum-of-terms form and raises NotRepresentable.
GrossNumber pow(const GrossNumber& base, const GrossNumber& exponent);

}  // namespace grossnum
