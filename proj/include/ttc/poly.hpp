#pragma once

#include <string>
#include <vector>

#include "ttc/field.hpp"

namespace ttc {

// Dense univariate polynomial over a Field.  Coefficients lowest degree
// first; no trailing zeros are stored.  deg() is -1 for the zero polynomial
// (standing in for negative infinity).
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Scalar> coeffs);

    static Poly monomial(const FieldPtr& field, std::size_t degree);
    static Poly monomial(const FieldPtr& field, std::size_t degree, const Scalar& c);
    static Poly constant(const FieldPtr& field, const Scalar& c);

    const FieldPtr& field() const { return field_; }
    int deg() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of x^i (zero beyond the degree).
    Scalar coeff(std::size_t i) const;
    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;

    Poly scaled(const Scalar& c) const;
    Scalar eval(const Scalar& x) const;
    std::string str(const std::string& var = "x") const;

    // Quotient/remainder; divisor nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    // Division known to be exact (throws if a remainder appears).
    static Poly exact_div(const Poly& a, const Poly& b);

private:
    void trim();

    FieldPtr field_;
    std::vector<Scalar> coeffs_;
};

enum class DerivKind { Standard, Hasse };

// j-th derivative of g.  Hasse: H^j(x^i) = C(i,j) x^{i-j}; Standard:
// (x^i)^(j) = i(i-1)...(i-j+1) x^{i-j}.  Hasse is the characteristic-robust
// variant (column scaling by 1/j! folded in).
Poly derivative(const Poly& g, std::size_t order, DerivKind kind);
inline Poly hasse_derivative(const Poly& g, std::size_t order) {
    return derivative(g, order, DerivKind::Hasse);
}

// Monic irreducible polynomial of degree d over F_p; deterministic for a
// fixed seed.
Poly find_irreducible(u64 p, std::size_t d, u64 seed);

}  // namespace ttc
