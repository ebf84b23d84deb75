#pragma once

#include <optional>

#include "ttc/poly.hpp"
#include "ttc/treecode.hpp"

namespace ttc {

// Two-node Birkhoff interpolation: find f of degree <= p+q-1 with prescribed
// derivatives of orders jset at node a and kset at node b.

// Counting condition |jset cap [0,s]| + |kset cap [0,s]| >= s+1 for all
// 0 <= s <= p+q-1 (the classical range; see README for the convention).
bool polya_condition(const std::vector<std::size_t>& jset,
                     const std::vector<std::size_t>& kset);

// (p+q) x (p+q) system matrix: rows are monomials x^i, i = 0..p+q-1; columns
// are the derivative conditions (jset at a first, then kset at b).
Matrix birkhoff_matrix(const Scalar& a, const Scalar& b,
                       const std::vector<std::size_t>& jset,
                       const std::vector<std::size_t>& kset, const FieldPtr& F,
                       DerivKind kind);

struct BirkhoffInstance {
    Scalar a, b;
    std::vector<std::size_t> jset, kset;  // strictly increasing orders
    std::vector<Scalar> avals, bvals;
};

// The unique interpolant when the system is nonsingular; SingularSystem
// otherwise (over Q this happens exactly when the Polya condition fails).
Poly solve_birkhoff(const BirkhoffInstance& inst, const FieldPtr& F, DerivKind kind);

// The (n+1) x 2(n+1) matrix M(a,b) with entries D^j(x^i) at a on odd columns
// and at b on even columns (1-based).  With Hasse derivatives this is a
// normal-form parity check; at (a,b) = (1,0) its odd columns are the binomial
// matrix L_n and its even columns the identity.
Matrix derivative_pcheck(const Scalar& a, const Scalar& b, std::size_t n, const FieldPtr& F,
                         DerivKind kind);

struct PolyaInstanceWitness {
    std::vector<std::size_t> jset, kset;
    bool polya = false;
    bool nonsingular = false;
};

struct PolyaMdsReport {
    bool polya_holds = false;      // every Polya-valid instance is solvable
    bool structural_ok = true;     // every Polya-invalid instance is singular
    std::optional<PolyaInstanceWitness> first_violation;  // Polya-valid but singular
    MdsVerdict mds;                // MDS verdict of M(a,b)
    bool agree = false;            // polya_holds == mds
    u64 instances_checked = 0;
};

// Exhaustively compares interpolation solvability against the Polya condition
// for all order sets with p+q <= n+1 (orders below p+q), and against the MDS
// verdict of M(a,b).  Hasse derivatives throughout.
PolyaMdsReport polya_mds_equiv(const Scalar& a, const Scalar& b, std::size_t n,
                               const FieldPtr& F);

}  // namespace ttc
