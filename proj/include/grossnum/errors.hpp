#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grossnum {

// Base of all domain errors. name() is the stable identifier surfaced by the
// CLI and kept distinct from the human-readable what() message.
class GrossError : public std::runtime_error {
public:
    GrossError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DivisionByZero : public GrossError {
public:
    DivisionByZero() : GrossError("DivisionByZero", "division by zero") {}
};

// Result does not fit the finite-sum-of-terms form (e.g. 2^G) or exceeds the
// exact-expansion limits of this representation.
class NotRepresentable : public GrossError {
public:
    explicit NotRepresentable(const std::string& what)
        : GrossError("NotRepresentable", what) {}
};

class ZeroToNegativePower : public GrossError {
public:
    ZeroToNegativePower()
        : GrossError("ZeroToNegativePower", "zero raised to a negative power") {}
};

// 0^0.
class IndeterminatePower : public GrossError {
public:
    IndeterminatePower() : GrossError("Indeterminate", "0^0 is indeterminate") {}
};

class InvalidDescriptor : public GrossError {
public:
    explicit InvalidDescriptor(const std::string& what)
        : GrossError("InvalidDescriptor", what) {}
};

// Raised when a floor annotation could flip a measure comparison.
class AmbiguousComparison : public GrossError {
public:
    explicit AmbiguousComparison(const std::string& what)
        : GrossError("AmbiguousComparison", what) {}
};

class NonIntegerScore : public GrossError {
public:
    explicit NonIntegerScore(const std::string& what)
        : GrossError("NonIntegerScore", what) {}
};

class DimensionMismatch : public GrossError {
public:
    explicit DimensionMismatch(const std::string& what)
        : GrossError("DimensionMismatch", what) {}
};

class InvalidScoreVector : public GrossError {
public:
    explicit InvalidScoreVector(const std::string& what)
        : GrossError("InvalidScoreVector", what) {}
};

class NotAnAdmissibleLength : public GrossError {
public:
    explicit NotAnAdmissibleLength(const std::string& what)
        : GrossError("NotAnAdmissibleLength", what) {}
};

// Carries the byte offset of the offending token and the set of token kinds
// that would have been accepted there.
class SyntaxError : public GrossError {
public:
    SyntaxError(std::size_t position, std::vector<std::string> expected,
                const std::string& what)
        : GrossError("SyntaxError", what),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

}  // namespace grossnum
