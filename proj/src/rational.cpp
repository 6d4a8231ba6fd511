#include "grossnum/rational.hpp"

#include <cctype>

#include "grossnum/errors.hpp"

namespace grossnum {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DivisionByZero();
    q_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (sgn(den) == 0) throw DivisionByZero();
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZero();
    return Rational(mpq_class(a.q_ / b.q_));
}

Integer Rational::floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    if (invert && is_zero()) throw DivisionByZero();
    unsigned long mag = invert ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), mag);
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), mag);
    return invert ? Rational(d, n) : Rational(n, d);
}

std::optional<Rational> Rational::root(unsigned long n) const {
    if (n == 0) return std::nullopt;
    if (n == 1) return *this;
    if (is_zero()) return Rational(0);
    if (is_negative() && n % 2 == 0) return std::nullopt;

    Integer num_mag(::abs(mpz_class(q_.get_num())));
    Integer num_root, den_root;
    // mpz_root reports whether the truncated root was exact.
    if (mpz_root(num_root.get_mpz_t(), num_mag.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(den_root.get_mpz_t(), q_.get_den_mpz_t(), n) == 0) return std::nullopt;
    if (is_negative()) num_root = -num_root;
    return Rational(num_root, den_root);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::optional<Rational> Rational::from_numeral(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    std::string_view head = text;
    std::string_view tail;
    char sep = '\0';
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' || text[i] == '.') {
            sep = text[i];
            head = text.substr(0, i);
            tail = text.substr(i + 1);
            break;
        }
    }
    if (!all_digits(head)) return std::nullopt;

    Rational value;
    if (sep == '\0') {
        value = Rational(Integer(std::string(head), 10));
    } else if (!all_digits(tail)) {
        return std::nullopt;
    } else if (sep == '/') {
        Integer den(std::string(tail), 10);
        if (sgn(den) == 0) return std::nullopt;
        value = Rational(Integer(std::string(head), 10), den);
    } else {
        // Finite decimal: scale the fraction digits by a power of ten.
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
        Integer whole(std::string(head), 10);
        Integer frac(std::string(tail), 10);
        value = Rational(whole * scale + frac, scale);
    }
    return negative ? -value : value;
}

}  // namespace grossnum
