#pragma once

#include <utility>
#include <vector>

#include "ttc/matrix.hpp"
#include "ttc/polymatrix.hpp"

namespace ttc {

// Generators for the matrix families of the source material: Cauchy and
// Cauchy-like, Hilbert, Singleton, Vandermonde, Pascal/binomial, and the
// symbolic W_n(x) witness family.

// Entry (i,j) = g_i h_j / (a_i - b_j).  Empty g/h default to all ones.
// DenominatorZero(i,j) when a_i = b_j (1-based indices).
Matrix cauchy_like(const FieldPtr& F, const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                   std::vector<Scalar> g = {}, std::vector<Scalar> h = {});
inline Matrix cauchy(const FieldPtr& F, const std::vector<Scalar>& a,
                     const std::vector<Scalar>& b) {
    return cauchy_like(F, a, b);
}

// Hilbert matrix 1/(i+j-1) as the Cauchy special case a_i = i, b_j = 1-j.
// Needs characteristic 0 or p >= m+n.
Matrix hilbert(const FieldPtr& F, std::size_t m, std::size_t n);

enum class PascalKind {
    Full,            // P_n = (C(i+j, j)), i,j = 0..n
    LowerBinomial,   // L_n = (C(i, j)),   i,j = 0..n
};
// Exact binomial entries over Q; reduce with Matrix::mod_p for prime fields.
Matrix pascal_family(std::size_t n, PascalKind kind);

// (x_j^i), i = 0..m-1.
Matrix vandermonde(const FieldPtr& F, std::size_t m, const std::vector<Scalar>& xs);

// Entry (i,j) = 1/(1 - a^{i+j-1}) for 1-based i,j.  The exponent convention
// i+j-1 (instead of the literal i+j-2) keeps every denominator nonzero
// exactly when ord(a) > 2n-1; UnitDenominator(e) reports the first used
// exponent with a^e = 1.
Matrix singleton_matrix(const FieldPtr& F, const Scalar& a, std::size_t n);

// Lower triangular W_n(x) with w_ij = x^{(n-i+j-1)^2} on and below the
// diagonal, over F_p[x].
PolyMatrix wn_matrix(std::size_t n, u64 p);

// W_n evaluated in F_p[x]/(f) with deg f > n(n-1)^2, so every admissible
// subdeterminant stays nonzero in the quotient.
std::pair<FieldPtr, Matrix> wn_field_instance(std::size_t n, u64 p, u64 seed);

}  // namespace ttc
