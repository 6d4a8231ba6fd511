#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "grossnum/errors.hpp"
#include "grossnum/gross_number.hpp"

namespace grossnum {

// A result list to rank, highest-priority criterion first (gold, silver,
// bronze, ...). Scores are nonnegative rationals; the vector length is the
// criterion count k >= 1.
struct ScoreVector {
    std::vector<Rational> scores;

    std::size_t k() const { return scores.size(); }

    nlohmann::json to_json() const;
    static ScoreVector from_json(const nlohmann::json& j);
};

// Throws InvalidScoreVector unless k >= 1 and every score is >= 0.
void validate(const ScoreVector& v);

// Rank as a single gross number: scores[0]*G^(k-1) + ... + scores[k-1].
GrossNumber gross_rank(const ScoreVector& v);

// Lexicographic comparison through gross_rank. Throws DimensionMismatch when
// the two vectors have different k.
Ordering gross_compare(const ScoreVector& a, const ScoreVector& b);

// The binary-fraction encoding: scores[0] ones, a zero, scores[1] ones, ...
// Read as a fraction "0.bits" in base two.
struct BitRank {
    std::string bits;

    std::size_t bit_length() const { return bits.size(); }

    // Exact value of 0.bits as a rational with a power-of-two denominator.
    Rational value() const;

    nlohmann::json to_json() const;
    static BitRank from_json(const nlohmann::json& j);

    friend bool operator==(const BitRank&, const BitRank&) = default;
};

// Largest bit string binary_rank will materialize.
inline constexpr std::size_t kMaxRankBits = 1u << 20;

// Throws NonIntegerScore for fractional scores and NotRepresentable when the
// encoding would exceed kMaxRankBits bits.
BitRank binary_rank(const ScoreVector& v);

// Compares the two binary fractions exactly. Same errors as binary_rank plus
// DimensionMismatch.
Ordering binary_compare(const ScoreVector& a, const ScoreVector& b);

}  // namespace grossnum
