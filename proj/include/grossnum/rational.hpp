#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace grossnum {

using Integer = mpz_class;

// Exact rational number: arbitrary-precision numerator/denominator, always
// reduced, denominator > 0. Thin wrapper over GMP that guarantees canonical
// form and adds the few exact-root helpers the rest of the library needs.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, enables literals
    Rational(int n) : q_(n) {}   // NOLINT
    Rational(long num, long den);
    explicit Rational(const Integer& num, const Integer& den = Integer(1));
    explicit Rational(mpq_class q);

    // Accepts "123", "-7", "3/4", "-3/4", and finite decimals like "0.25".
    // Rejects everything else (including zero denominators).
    static std::optional<Rational> from_numeral(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_negative() const { return sgn(q_) < 0; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }
    Integer floor() const;

    // Exact integer power; negative exponents require a nonzero value.
    Rational pow(long e) const;

    // Exact n-th root (n >= 1), if one exists in the rationals.
    std::optional<Rational> root(unsigned long n) const;

    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

private:
    mpq_class q_;
};

}  // namespace grossnum
