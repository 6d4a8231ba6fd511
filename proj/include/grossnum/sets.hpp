#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grossnum/gross_number.hpp"
#include "grossnum/text.hpp"

namespace grossnum {

// Symbolic descriptors for the measurable infinite sets: the fixed catalog
// (naturals, integers, their punctured variants, residue progressions,
// squares, pairs, the two rational numeral systems, power sets, and
// positional numerals over an interval) plus the element-count constructors.
// The catalog is closed; arbitrary user-defined sets are out of scope. The
// text grammar is documented in SETS.md.

// Display-only metadata mirroring the classical cardinality column; takes
// part in no computation.
enum class CantorLabel { CountableAleph0, ContinuumC };

const char* cantor_label_name(CantorLabel label);

class SetDescriptor {
public:
    enum class Kind {
        Naturals,
        NaturalsMinus,
        Progression,  // N(k,n): {k, k+n, k+2n, ...}, 1 <= k <= n
        Integers,
        IntegersMinus,
        Squares,
        Pairs,
        Q1,  // numerals p/q, p and q integers, q != 0
        Q2,  // numerals 0, p/q, -p/q with p and q naturals
        PowerSet,
        IntervalNumerals,  // numerals of base b covering [lower, upper) or [lower, upper]
        DisjointUnion,
        MinusElements,
        PlusElements,
    };

    static SetDescriptor naturals();
    static SetDescriptor naturals_minus(std::vector<unsigned long> removed);
    static SetDescriptor progression(unsigned long k, unsigned long n);
    static SetDescriptor integers();
    static SetDescriptor integers_minus(std::vector<long> removed);
    static SetDescriptor squares();
    static SetDescriptor pairs();
    static SetDescriptor q1();
    static SetDescriptor q2();
    static SetDescriptor power_set(SetDescriptor inner);
    static SetDescriptor interval_numerals(unsigned long base, const Rational& lower,
                                           const Rational& upper, bool closed_upper);
    // Only progressions with one common modulus and distinct residues are
    // accepted; disjointness of anything else is not checkable in this
    // grammar.
    static SetDescriptor disjoint_union(std::vector<SetDescriptor> members);
    static SetDescriptor minus_elements(SetDescriptor inner, unsigned long count);
    static SetDescriptor plus_elements(SetDescriptor inner, unsigned long count);

    Kind kind() const { return kind_; }
    CantorLabel cantor_label() const;

    const std::vector<unsigned long>& removed_naturals() const { return removed_naturals_; }
    const std::vector<long>& removed_integers() const { return removed_integers_; }
    unsigned long residue() const { return k_; }
    unsigned long modulus() const { return n_; }
    unsigned long base() const { return base_; }
    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }
    bool closed_upper() const { return closed_upper_; }
    const SetDescriptor& inner() const { return *inner_; }
    const std::vector<SetDescriptor>& members() const { return members_; }
    unsigned long count() const { return count_; }

    // Canonical text form; parse_set(str()) reproduces the descriptor.
    std::string str() const;

private:
    explicit SetDescriptor(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<unsigned long> removed_naturals_;
    std::vector<long> removed_integers_;
    unsigned long k_ = 0, n_ = 0;
    unsigned long base_ = 0;
    Rational lower_, upper_;
    bool closed_upper_ = false;
    std::shared_ptr<const SetDescriptor> inner_;
    std::vector<SetDescriptor> members_;
    unsigned long count_ = 0;
};

// The exact number of elements of a described set: either a gross-number
// (Poly) or the exponential form coeff * base^exponent + offset (Exp). The
// floor flag marks measures like the squares' floor(G^(1/2)), whose
// arithmetic beyond integer shifts and comparison is not defined.
class Measure {
public:
    static Measure poly(GrossNumber value, bool floor_annotated = false);
    static Measure exp(const Rational& coeff, unsigned long base, GrossNumber exponent,
                       GrossNumber offset = GrossNumber());

    bool is_poly() const { return !is_exp_; }
    bool is_exp() const { return is_exp_; }
    bool floor_annotated() const { return floor_; }

    const GrossNumber& value() const { return value_; }  // Poly form
    const Rational& coeff() const { return coeff_; }
    unsigned long base() const { return base_; }
    const GrossNumber& exponent() const { return exponent_; }
    const GrossNumber& offset() const { return offset_; }

    std::string str(const PrintOptions& opts = {}) const;

    // Schema: {form, coeff, base, exponent, offset, floor}; a Poly measure
    // carries its value in "offset" with the exponential fields null.
    nlohmann::json to_json() const;
    static Measure from_json(const nlohmann::json& j);

    friend bool operator==(const Measure& a, const Measure& b);
    friend bool operator!=(const Measure& a, const Measure& b) { return !(a == b); }

private:
    Measure() = default;

    bool is_exp_ = false;
    bool floor_ = false;
    GrossNumber value_;     // Poly
    Rational coeff_;        // Exp
    unsigned long base_ = 0;
    GrossNumber exponent_;
    GrossNumber offset_;
};

std::ostream& operator<<(std::ostream& os, const Measure& m);

// Exact grossone measure of a described set (the catalog rules).
Measure measure(const SetDescriptor& s);

// Total preorder on measures. Exponential forms dominate polynomial ones;
// two exponential forms compare by their formal logarithms, decided exactly
// through big-integer power comparison, with ties falling through to the
// coefficient and then the offset. Throws AmbiguousComparison when a floor
// annotation could change the outcome.
Ordering compare_measure(const Measure& a, const Measure& b);

enum class RationalSystem { Q1, Q2 };

// How many distinct numerals of the system denote the number zero.
Measure zero_numeral_count(RationalSystem system);

// No sequence can have more than G elements.
Measure max_sequence_length();
bool check_sequence(const GrossNumber& length);

// Text form of a descriptor, e.g. "N \ {3,5,10,23,114}", "P(N)",
// "num[1,2)@10", "U(N(1,2),N(2,2))", "Z - 1". Throws SyntaxError.
SetDescriptor parse_set(std::string_view text);

}  // namespace grossnum
