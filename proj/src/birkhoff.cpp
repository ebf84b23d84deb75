#include "ttc/birkhoff.hpp"

namespace ttc {

namespace {

void check_orders(const std::vector<std::size_t>& set) {
    for (std::size_t i = 1; i < set.size(); ++i)
        if (set[i] <= set[i - 1]) throw NonIncreasingIndices();
}

// D^order(x^i) evaluated at node.
Scalar deriv_at(const FieldPtr& F, std::size_t i, std::size_t order, const Scalar& node,
                DerivKind kind) {
    if (i < order) return F->zero();
    Scalar coef = kind == DerivKind::Hasse ? F->binomial(i, order)
                                           : F->falling_factorial(i, order);
    return F->mul(coef, F->pow(node, i - order));
}

}  // namespace

bool polya_condition(const std::vector<std::size_t>& jset,
                     const std::vector<std::size_t>& kset) {
    check_orders(jset);
    check_orders(kset);
    std::size_t m = jset.size() + kset.size();
    for (std::size_t s = 0; s < m; ++s) {
        std::size_t count = 0;
        for (std::size_t j : jset)
            if (j <= s) ++count;
        for (std::size_t k : kset)
            if (k <= s) ++count;
        if (count < s + 1) return false;
    }
    return true;
}

Matrix birkhoff_matrix(const Scalar& a, const Scalar& b,
                       const std::vector<std::size_t>& jset,
                       const std::vector<std::size_t>& kset, const FieldPtr& F,
                       DerivKind kind) {
    if (F->eq(a, b)) throw NodesEqual();
    check_orders(jset);
    check_orders(kset);
    std::size_t m = jset.size() + kset.size();
    if (m == 0) throw DomainError("at least one interpolation condition required");
    Matrix out(F, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t col = 0;
        for (std::size_t j : jset) out.set(i, col++, deriv_at(F, i, j, a, kind));
        for (std::size_t k : kset) out.set(i, col++, deriv_at(F, i, k, b, kind));
    }
    return out;
}

Poly solve_birkhoff(const BirkhoffInstance& inst, const FieldPtr& F, DerivKind kind) {
    Matrix sys = birkhoff_matrix(inst.a, inst.b, inst.jset, inst.kset, F, kind).transpose();
    std::size_t m = sys.rows();
    if (inst.avals.size() != inst.jset.size() || inst.bvals.size() != inst.kset.size())
        throw DomainError("value count must match order count");
    // augmented [sys | rhs], solved by RREF
    Matrix aug(F, m, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) aug.set(i, j, sys.at(i, j));
    for (std::size_t i = 0; i < inst.avals.size(); ++i) aug.set(i, m, inst.avals[i]);
    for (std::size_t i = 0; i < inst.bvals.size(); ++i)
        aug.set(inst.avals.size() + i, m, inst.bvals[i]);
    std::vector<std::size_t> pivots;
    Matrix r = aug.rref(&pivots);
    if (pivots.size() != m || pivots.back() >= m) throw SingularSystem();
    std::vector<Scalar> coeffs(m, F->zero());
    for (std::size_t i = 0; i < m; ++i) coeffs[i] = r.at(i, m);
    return Poly(F, std::move(coeffs));
}

Matrix derivative_pcheck(const Scalar& a, const Scalar& b, std::size_t n, const FieldPtr& F,
                         DerivKind kind) {
    if (F->eq(a, b)) throw NodesEqual();
    Matrix out(F, n + 1, 2 * (n + 1));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            out.set(i, 2 * j, deriv_at(F, i, j, a, kind));
            out.set(i, 2 * j + 1, deriv_at(F, i, j, b, kind));
        }
    return out;
}

PolyaMdsReport polya_mds_equiv(const Scalar& a, const Scalar& b, std::size_t n,
                               const FieldPtr& F) {
    if (F->eq(a, b)) throw NodesEqual();
    if (n > 6) throw TooLarge("polya_mds_equiv enumerates order sets for n <= 6");
    PolyaMdsReport rep;
    rep.polya_holds = true;

    for (std::size_t m = 1; m <= n + 1; ++m) {
        // all (jset, kset) with orders in [0, m-1] and |jset| + |kset| = m
        for (u64 jmask = 0; jmask < (1ULL << m); ++jmask) {
            for (u64 kmask = 0; kmask < (1ULL << m); ++kmask) {
                if (__builtin_popcountll(jmask) + __builtin_popcountll(kmask) !=
                    static_cast<int>(m))
                    continue;
                std::vector<std::size_t> jset, kset;
                for (std::size_t o = 0; o < m; ++o) {
                    if ((jmask >> o) & 1) jset.push_back(o);
                    if ((kmask >> o) & 1) kset.push_back(o);
                }
                ++rep.instances_checked;
                bool polya = polya_condition(jset, kset);
                bool nonsingular =
                    !F->is_zero(birkhoff_matrix(a, b, jset, kset, F, DerivKind::Hasse)
                                    .determinant());
                if (polya && !nonsingular) {
                    rep.polya_holds = false;
                    if (!rep.first_violation)
                        rep.first_violation = PolyaInstanceWitness{jset, kset, polya, nonsingular};
                }
                if (!polya && nonsingular) {
                    rep.structural_ok = false;
                    if (!rep.first_violation)
                        rep.first_violation = PolyaInstanceWitness{jset, kset, polya, nonsingular};
                }
            }
        }
    }

    NormalFormPcheck pc =
        NormalFormPcheck::validate(derivative_pcheck(a, b, n, F, DerivKind::Hasse), 2);
    rep.mds = is_mds(pc, MdsMethod::Columns);
    rep.agree = rep.polya_holds == rep.mds.mds;
    return rep;
}

}  // namespace ttc
