#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttc {

// Base class for all library errors. code() is a stable machine-readable tag;
// the CLI uses it to distinguish data errors from negative verdicts.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct CompositeModulus : Error {
    explicit CompositeModulus(std::uint64_t p)
        : Error("CompositeModulus", "modulus " + std::to_string(p) + " is not prime") {}
};

struct ReduciblePolynomial : Error {
    explicit ReduciblePolynomial(const std::string& what)
        : Error("ReduciblePolynomial", what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("DivisionByZero", "division by zero field element") {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what = "operands belong to different fields")
        : Error("FieldMismatch", what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("IndexOutOfRange", what) {}
};

struct NonIncreasingIndices : Error {
    NonIncreasingIndices() : Error("NonIncreasingIndices", "index list must be strictly increasing") {}
};

struct NotSquare : Error {
    NotSquare() : Error("NotSquare", "operation requires a square matrix") {}
};

struct SingularLeadingMinor : Error {
    explicit SingularLeadingMinor(std::size_t k)
        : Error("SingularLeadingMinor",
                "leading principal minor of order " + std::to_string(k) + " is singular"),
          k(k) {}
    std::size_t k;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("SingularMatrix", "matrix is singular") {}
};

struct DenominatorZero : Error {
    DenominatorZero(std::size_t i, std::size_t j)
        : Error("DenominatorZero",
                "zero denominator at entry (" + std::to_string(i) + "," + std::to_string(j) + ")"),
          i(i), j(j) {}
    std::size_t i, j;
};

struct UnitDenominator : Error {
    explicit UnitDenominator(std::uint64_t e)
        : Error("UnitDenominator", "a^" + std::to_string(e) + " = 1 makes a denominator vanish"),
          exponent(e) {}
    std::uint64_t exponent;
};

struct NonIntegralFamily : Error {
    NonIntegralFamily() : Error("NonIntegralFamily", "matrix entries are not all integral") {}
};

struct ZeroDiagonal : Error {
    explicit ZeroDiagonal(std::size_t i)
        : Error("ZeroDiagonal", "zero diagonal entry at position " + std::to_string(i)), i(i) {}
    std::size_t i;
};

struct PropertyStarViolated : Error {
    explicit PropertyStarViolated(std::size_t k)
        : Error("PropertyStarViolated",
                "last " + std::to_string(k) + " column blocks do not have the required rank"),
          k(k) {}
    std::size_t k;
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what) : Error("RankDeficient", what) {}
};

struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error("TooLarge", what) {}
};

struct WrongRate : Error {
    explicit WrongRate(const std::string& what) : Error("WrongRate", what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(std::uint64_t bound)
        : Error("SearchExhausted", "search exhausted after " + std::to_string(bound) + " candidates"),
          bound(bound) {}
    std::uint64_t bound;
};

struct RetriesExhausted : Error {
    explicit RetriesExhausted(std::size_t step)
        : Error("RetriesExhausted", "retry limit exhausted at step " + std::to_string(step)),
          step(step) {}
    std::size_t step;
};

struct NotTTN : Error {
    NotTTN(std::vector<std::size_t> rows, std::vector<std::size_t> cols)
        : Error("NotTTN", "matrix is not triangular totally nonsingular"),
          rows(std::move(rows)), cols(std::move(cols)) {}
    std::vector<std::size_t> rows, cols;  // 1-based witness
};

struct NodesEqual : Error {
    NodesEqual() : Error("NodesEqual", "interpolation nodes must be distinct") {}
};

struct SingularSystem : Error {
    SingularSystem() : Error("SingularSystem", "interpolation system is singular") {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error("DomainError", what) {}
};

struct AlphabetMismatch : Error {
    explicit AlphabetMismatch(const std::string& what) : Error("AlphabetMismatch", what) {}
};

struct LengthOverflow : Error {
    explicit LengthOverflow(const std::string& what) : Error("LengthOverflow", what) {}
};

}  // namespace ttc
