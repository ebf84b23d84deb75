#include "doctest.h"

#include "ttc/families.hpp"
#include "ttc/matrix.hpp"
#include "ttc/polymatrix.hpp"
#include "ttc/rng.hpp"

using namespace ttc;

namespace {

// Leibniz-formula determinant: independent oracle for n <= 4
Scalar det_leibniz(const Matrix& m) {
    const FieldPtr& F = m.field();
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Scalar det = F->zero();
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Scalar term = F->one();
        for (std::size_t i = 0; i < n; ++i) term = F->mul(term, m.at(i, perm[i]));
        det = inv % 2 == 0 ? F->add(det, term) : F->sub(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Matrix random_matrix(const FieldPtr& F, std::size_t n, SplitMix64& rng) {
    Matrix m(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (F->kind() == FieldKind::Rationals) {
                m.set(i, j, F->from_int(static_cast<i64>(rng.below(13)) - 6));
            } else {
                m.set(i, j, F->element_at(rng.below(*F->size())));
            }
        }
    return m;
}

}  // namespace

TEST_CASE("submatrix selection") {
    FieldPtr q = Field::rationals();
    Matrix m = Matrix::from_ints(q, {{1, 0}, {1, 2}});
    CHECK(m.submatrix({1, 2}, {1, 2}) == m);  // full selection
    Matrix e = m.submatrix({2}, {1});
    CHECK(q->eq(e.at(0, 0), q->one()));

    Matrix big = Matrix::from_ints(q, {{1, 1, 0, 0}, {1, 0, 2, 1}});
    Matrix sub = big.submatrix({1, 2}, {2, 4});
    CHECK(sub == Matrix::from_ints(q, {{1, 0}, {0, 1}}));

    CHECK_THROWS_AS(m.submatrix({2, 1}, {1}), NonIncreasingIndices);
    CHECK_THROWS_AS(m.submatrix({1, 3}, {1}), IndexOutOfRange);
    CHECK_THROWS_AS(m.submatrix({0}, {1}), IndexOutOfRange);
}

TEST_CASE("determinant examples and oracle agreement") {
    FieldPtr q = Field::rationals();
    CHECK(q->eq(Matrix::identity(q, 3).determinant(), q->one()));
    CHECK(q->eq(Matrix::from_ints(q, {{1, 1}, {1, 2}}).determinant(), q->one()));
    CHECK_THROWS_AS(Matrix(q, 2, 3).determinant(), NotSquare);

    SplitMix64 rng(7);
    for (const FieldPtr& F : {Field::prime(7), Field::prime(101), Field::rationals()}) {
        for (int t = 0; t < 20; ++t) {
            Matrix m = random_matrix(F, 3 + t % 2, rng);
            CHECK(F->eq(m.determinant(), det_leibniz(m)));
        }
    }
}

TEST_CASE("det is multiplicative on random 4x4 pairs") {
    SplitMix64 rng(11);
    for (const FieldPtr& F : {Field::prime(5), Field::rationals()}) {
        for (int t = 0; t < 10; ++t) {
            Matrix a = random_matrix(F, 4, rng);
            Matrix b = random_matrix(F, 4, rng);
            CHECK(F->eq((a * b).determinant(), F->mul(a.determinant(), b.determinant())));
        }
    }
}

TEST_CASE("rank examples") {
    FieldPtr q = Field::rationals();
    CHECK(Matrix(q, 3, 5).rank() == 0);
    FieldPtr f3 = Field::prime(3);
    CHECK(Matrix::from_ints(f3, {{1, 1, 0, 0}, {1, 0, 2, 1}}).rank() == 2);
    CHECK(Matrix::from_ints(q, {{1, 2}, {2, 4}}).rank() == 1);
}

TEST_CASE("lu factorization") {
    FieldPtr q = Field::rationals();
    auto [li, ui] = Matrix::identity(q, 4).lu_factor();
    CHECK(li == Matrix::identity(q, 4));
    CHECK(ui == Matrix::identity(q, 4));

    // Pascal P_2 = L L^T with unit-diagonal U = L^T
    Matrix p2 = Matrix::from_ints(q, {{1, 1, 1}, {1, 2, 3}, {1, 3, 6}});
    auto [l, u] = p2.lu_factor();
    Matrix expected_l = Matrix::from_ints(q, {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}});
    CHECK(l == expected_l);
    CHECK(u == expected_l.transpose());
    CHECK(l * u == p2);

    try {
        Matrix::from_ints(q, {{0, 1}, {1, 0}}).lu_factor();
        CHECK(false);
    } catch (const SingularLeadingMinor& e) {
        CHECK(e.k == 1);
    }

    // round trip on random matrices with nonzero leading minors
    SplitMix64 rng(13);
    FieldPtr f7 = Field::prime(7);
    int done = 0;
    while (done < 10) {
        Matrix m = random_matrix(f7, 4, rng);
        try {
            auto [L, U] = m.lu_factor();
            CHECK(L * U == m);
            ++done;
        } catch (const SingularLeadingMinor&) {
        }
    }
}

TEST_CASE("inverse") {
    FieldPtr q = Field::rationals();
    CHECK(Matrix::identity(q, 4).inverse() == Matrix::identity(q, 4));

    FieldPtr f3 = Field::prime(3);
    Matrix m = Matrix::from_ints(f3, {{1, 0}, {1, 2}});
    Matrix inv = m.inverse();
    CHECK(inv == Matrix::from_ints(f3, {{1, 0}, {1, 2}}));  // self-inverse mod 3
    CHECK(m * inv == Matrix::identity(f3, 2));

    CHECK_THROWS_AS(Matrix::from_ints(q, {{1, 1}, {2, 2}}).inverse(), SingularMatrix);

    SplitMix64 rng(17);
    for (const FieldPtr& F : {Field::prime(11), Field::rationals()}) {
        int done = 0;
        while (done < 8) {
            Matrix r = random_matrix(F, 4, rng);
            try {
                Matrix ri = r.inverse();
                CHECK(r * ri == Matrix::identity(F, 4));
                ++done;
            } catch (const SingularMatrix&) {
            }
        }
    }
}

TEST_CASE("nullspace vectors annihilate the matrix") {
    FieldPtr f5 = Field::prime(5);
    Matrix m = Matrix::from_ints(f5, {{1, 2, 3, 4}, {0, 1, 1, 0}});
    Matrix ns = m.nullspace();
    CHECK(ns.rows() == 2);
    CHECK((m * ns.transpose()).is_zero());
}

TEST_CASE("polynomial matrix determinants") {
    // det W_2(x) over F_3 is x^2
    PolyMatrix w2 = wn_matrix(2, 3);
    FieldPtr f3 = Field::prime(3);
    CHECK(w2.at(0, 0) == Poly::monomial(f3, 1));
    CHECK(w2.at(1, 0) == Poly::constant(f3, f3->one()));
    CHECK(w2.at(1, 1) == Poly::monomial(f3, 1));
    CHECK(w2.at(0, 1).is_zero());
    CHECK(w2.determinant_bareiss() == Poly::monomial(f3, 2));
    CHECK(w2.determinant_cofactor() == Poly::monomial(f3, 2));

    // Bareiss and cofactor agree on random polynomial matrices up to n = 5
    SplitMix64 rng(23);
    FieldPtr f5 = Field::prime(5);
    for (std::size_t n = 2; n <= 5; ++n) {
        for (int t = 0; t < 4; ++t) {
            PolyMatrix m(f5, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<Scalar> cs;
                    for (int c = 0; c < 3; ++c) cs.push_back(f5->element_at(rng.below(5)));
                    m.set(i, j, Poly(f5, std::move(cs)));
                }
            CHECK(m.determinant_bareiss() == m.determinant_cofactor());
        }
    }
}

TEST_CASE("mod_p reduction") {
    FieldPtr q = Field::rationals();
    Matrix m = Matrix::from_ints(q, {{6, -1}, {2, 3}});
    Matrix r = m.mod_p(Field::prime(5));
    CHECK(r == Matrix::from_ints(Field::prime(5), {{1, 4}, {2, 3}}));
    Matrix frac(q, 1, 1);
    frac.set(0, 0, q->parse("1/2"));
    CHECK_THROWS_AS(frac.mod_p(Field::prime(5)), NonIntegralFamily);
}
