#include "ttc/families.hpp"

#include "ttc/poly.hpp"

namespace ttc {

Matrix cauchy_like(const FieldPtr& F, const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                   std::vector<Scalar> g, std::vector<Scalar> h) {
    if (a.empty() || b.empty()) throw DomainError("cauchy_like needs nonempty node lists");
    if (g.empty()) g.assign(a.size(), F->one());
    if (h.empty()) h.assign(b.size(), F->one());
    if (g.size() != a.size() || h.size() != b.size())
        throw DomainError("scaling vectors must match node list lengths");
    Matrix m(F, a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            Scalar den = F->sub(a[i], b[j]);
            if (F->is_zero(den)) throw DenominatorZero(i + 1, j + 1);
            m.set(i, j, F->div(F->mul(g[i], h[j]), den));
        }
    return m;
}

Matrix hilbert(const FieldPtr& F, std::size_t m, std::size_t n) {
    if (F->kind() != FieldKind::Rationals && F->characteristic() < m + n)
        throw DomainError("Hilbert matrix needs characteristic 0 or p >= m+n");
    std::vector<Scalar> a, b;
    for (std::size_t i = 1; i <= m; ++i) a.push_back(F->from_int(static_cast<i64>(i)));
    for (std::size_t j = 1; j <= n; ++j) b.push_back(F->from_int(1 - static_cast<i64>(j)));
    return cauchy_like(F, a, b);
}

Matrix pascal_family(std::size_t n, PascalKind kind) {
    FieldPtr Q = Field::rationals();
    Matrix m(Q, n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            Scalar v = kind == PascalKind::Full ? Q->binomial(i + j, j) : Q->binomial(i, j);
            m.set(i, j, std::move(v));
        }
    return m;
}

Matrix vandermonde(const FieldPtr& F, std::size_t m, const std::vector<Scalar>& xs) {
    if (m == 0 || xs.empty()) throw DomainError("vandermonde needs positive dimensions");
    Matrix out(F, m, xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        Scalar pow = F->one();
        for (std::size_t i = 0; i < m; ++i) {
            out.set(i, j, pow);
            pow = F->mul(pow, xs[j]);
        }
    }
    return out;
}

Matrix singleton_matrix(const FieldPtr& F, const Scalar& a, std::size_t n) {
    if (n == 0) throw DomainError("singleton matrix needs n >= 1");
    // exponents i+j-1 range over 1..2n-1; check all used denominators up front
    std::vector<Scalar> apow(2 * n);  // apow[e] = a^e
    apow[0] = F->one();
    for (std::size_t e = 1; e <= 2 * n - 1; ++e) {
        apow[e] = F->mul(apow[e - 1], a);
        if (F->eq(apow[e], F->one())) throw UnitDenominator(e);
    }
    Matrix m(F, n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            m.set(i - 1, j - 1, F->inv(F->sub(F->one(), apow[i + j - 1])));
    return m;
}

PolyMatrix wn_matrix(std::size_t n, u64 p) {
    if (n == 0) throw DomainError("wn_matrix needs n >= 1");
    FieldPtr F = Field::prime(p);
    PolyMatrix m(F, n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
            std::size_t e = n - i + j - 1;
            m.set(i - 1, j - 1, Poly::monomial(F, e * e));
        }
    return m;
}

std::pair<FieldPtr, Matrix> wn_field_instance(std::size_t n, u64 p, u64 seed) {
    PolyMatrix w = wn_matrix(n, p);
    // admissible subdeterminants have degree at most n(n-1)^2
    std::size_t deg = n * (n - 1) * (n - 1) + 1;
    Poly f = find_irreducible(p, deg, seed);
    std::vector<u64> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(std::get<u64>(c));
    FieldPtr E = Field::extension(p, coeffs);
    return {E, w.eval_in(E)};
}

}  // namespace ttc
