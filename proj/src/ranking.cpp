#include "grossnum/ranking.hpp"

#include <algorithm>

namespace grossnum {

nlohmann::json ScoreVector::to_json() const {
    nlohmann::json list = nlohmann::json::array();
    for (const Rational& s : scores) {
        if (s.is_integer() && s.num().fits_slong_p())
            list.push_back(s.num().get_si());
        else
            list.push_back(s.str());
    }
    return nlohmann::json{{"scores", std::move(list)}};
}

ScoreVector ScoreVector::from_json(const nlohmann::json& j) {
    ScoreVector v;
    for (const auto& item : j.at("scores")) {
        if (item.is_number_integer()) {
            v.scores.emplace_back(item.get<long>());
        } else if (item.is_string()) {
            auto r = Rational::from_numeral(item.get<std::string>());
            if (!r) throw InvalidScoreVector("malformed score " + item.get<std::string>());
            v.scores.push_back(*r);
        } else {
            throw InvalidScoreVector(
                "scores must be integers or numeral strings like \"1/2\"");
        }
    }
    validate(v);
    return v;
}

void validate(const ScoreVector& v) {
    if (v.scores.empty())
        throw InvalidScoreVector("a score vector needs at least one entry");
    for (const Rational& s : v.scores)
        if (s.sign() < 0) throw InvalidScoreVector("scores must be nonnegative");
}

GrossNumber gross_rank(const ScoreVector& v) {
    validate(v);
    GrossNumber total;
    const std::size_t k = v.k();
    for (std::size_t i = 0; i < k; ++i) {
        Rational power(Integer(k - 1 - i));
        total = total + GrossNumber(v.scores[i], power);
    }
    return total;
}

Ordering gross_compare(const ScoreVector& a, const ScoreVector& b) {
    if (a.k() != b.k())
        throw DimensionMismatch("cannot compare score vectors of different lengths");
    return compare(gross_rank(a), gross_rank(b));
}

Rational BitRank::value() const {
    Integer numerator(0);
    for (char c : bits) {
        numerator <<= 1;
        if (c == '1') numerator += 1;
    }
    Integer denominator(1);
    mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), bits.size());
    return Rational(numerator, denominator);
}

nlohmann::json BitRank::to_json() const {
    return nlohmann::json{{"bits", bits}, {"bit_length", bit_length()}};
}

BitRank BitRank::from_json(const nlohmann::json& j) {
    BitRank r{j.at("bits").get<std::string>()};
    if (j.contains("bit_length") && j.at("bit_length").get<std::size_t>() != r.bit_length())
        throw InvalidScoreVector("bit_length does not match the bit string");
    if (r.bits.find_first_not_of("01") != std::string::npos)
        throw InvalidScoreVector("bits must be a string of 0s and 1s");
    return r;
}

BitRank binary_rank(const ScoreVector& v) {
    validate(v);
    Integer total_bits(v.k() - 1);
    for (const Rational& s : v.scores) {
        if (!s.is_integer())
            throw NonIntegerScore("the binary encoding only tallies whole scores, got " +
                                  s.str());
        total_bits += s.num();
    }
    if (!total_bits.fits_ulong_p() || total_bits.get_ui() > kMaxRankBits)
        throw NotRepresentable("binary rank of " + total_bits.get_str() +
                               " bits exceeds the supported length");

    BitRank r;
    r.bits.reserve(total_bits.get_ui());
    for (std::size_t i = 0; i < v.k(); ++i) {
        if (i) r.bits.push_back('0');
        r.bits.append(v.scores[i].num().get_ui(), '1');
    }
    return r;
}

Ordering binary_compare(const ScoreVector& a, const ScoreVector& b) {
    if (a.k() != b.k())
        throw DimensionMismatch("cannot compare score vectors of different lengths");
    const BitRank ra = binary_rank(a);
    const BitRank rb = binary_rank(b);
    const std::string& x = ra.bits;
    const std::string& y = rb.bits;
    // Lexicographic with zero padding: trailing zeros do not change the value.
    const std::size_t n = std::max(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        char cx = i < x.size() ? x[i] : '0';
        char cy = i < y.size() ? y[i] : '0';
        if (cx != cy) return cx > cy ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

}  // namespace grossnum
