#include "doctest.h"

#include "ttc/poly.hpp"
#include "ttc/rng.hpp"
#include "ttc/zpoly.hpp"

using namespace ttc;

namespace {

// binomial oracle by the additive recurrence, exact in u64 for small n
u64 binom_u64(u64 n, u64 k) {
    if (k > n) return 0;
    std::vector<u64> row(k + 1, 0);
    row[0] = 1;
    for (u64 i = 1; i <= n; ++i)
        for (u64 j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

// exhaustive trial division up to degree d/2 over F_p (oracle for
// irreducibility at small sizes)
bool irreducible_bruteforce(const zp::Z& f, u64 p) {
    int d = zp::deg(f);
    for (int dd = 1; dd <= d / 2; ++dd) {
        u64 count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            zp::Z g(dd + 1, 0);
            g[dd] = 1;
            u64 rest = idx;
            for (int i = 0; i < dd; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            if (zp::mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("hasse derivative worked examples") {
    FieldPtr q = Field::rationals();
    Poly x3 = Poly::monomial(q, 3);
    Poly h = hasse_derivative(x3, 2);
    // oracle: C(3,2) = 3
    CHECK(binom_u64(3, 2) == 3);
    CHECK(h == Poly::monomial(q, 1, q->from_int(3)));

    FieldPtr f2 = Field::prime(2);
    Poly x2 = Poly::monomial(f2, 2);
    CHECK(hasse_derivative(x2, 2) == Poly::constant(f2, f2->one()));  // C(2,2) = 1
    CHECK(derivative(x2, 2, DerivKind::Standard).is_zero());          // 2! = 0 mod 2

    Poly g(q, {q->from_int(4), q->from_int(-1), q->parse("2/3")});
    CHECK(hasse_derivative(g, 0) == g);
}

TEST_CASE("hasse derivatives compose with binomial factors") {
    // H^i o H^j = C(i+j, i) H^{i+j} on monomials up to degree 12
    for (const FieldPtr& F : {Field::rationals(), Field::prime(5), Field::prime(2)}) {
        for (std::size_t deg = 0; deg <= 12; ++deg) {
            Poly m = Poly::monomial(F, deg);
            for (std::size_t i = 0; i <= 4; ++i)
                for (std::size_t j = 0; j <= 4; ++j) {
                    Poly lhs = hasse_derivative(hasse_derivative(m, j), i);
                    Poly rhs = hasse_derivative(m, i + j).scaled(F->binomial(i + j, i));
                    CHECK(lhs == rhs);
                }
        }
    }
}

TEST_CASE("find_irreducible examples") {
    // the only monic irreducible cubics over F_2 are x^3+x+1 and x^3+x^2+1
    Poly f = find_irreducible(2, 3, 1);
    std::vector<u64> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(std::get<u64>(c));
    bool one_of_two = (coeffs == std::vector<u64>{1, 1, 0, 1}) ||
                      (coeffs == std::vector<u64>{1, 0, 1, 1});
    CHECK(one_of_two);
    CHECK(irreducible_bruteforce(coeffs, 2));

    // degree 1 always irreducible
    Poly lin = find_irreducible(3, 1, 7);
    CHECK(lin.deg() == 1);

    // quartic over F_2: no root and not (x^2+x+1)^2 = x^4+x^2+1
    Poly quart = find_irreducible(2, 4, 99);
    std::vector<u64> qc;
    for (const auto& c : quart.coeffs()) qc.push_back(std::get<u64>(c));
    CHECK(qc != std::vector<u64>{1, 0, 1, 0, 1});
    CHECK(irreducible_bruteforce(qc, 2));

    // determinism
    Poly again = find_irreducible(2, 4, 99);
    CHECK(quart == again);
}

TEST_CASE("irreducibility test agrees with brute force") {
    // every monic polynomial of degree <= 4 over F_2 and F_3
    for (u64 p : {2ull, 3ull}) {
        for (int d = 1; d <= 4; ++d) {
            u64 count = 1;
            for (int i = 0; i < d; ++i) count *= p;
            for (u64 idx = 0; idx < count; ++idx) {
                zp::Z f(d + 1, 0);
                f[d] = 1;
                u64 rest = idx;
                for (int i = 0; i < d; ++i) {
                    f[i] = rest % p;
                    rest /= p;
                }
                CHECK(zp::is_irreducible(f, p) == irreducible_bruteforce(f, p));
            }
        }
    }
}

TEST_CASE("polynomial ring basics") {
    FieldPtr f5 = Field::prime(5);
    Poly a(f5, {f5->from_int(1), f5->from_int(2)});                   // 1 + 2x
    Poly b(f5, {f5->from_int(3), f5->from_int(0), f5->from_int(1)});  // 3 + x^2
    Poly prod = a * b;
    CHECK(prod.deg() == 3);
    CHECK(std::get<u64>(prod.coeff(0)) == 3);
    CHECK(std::get<u64>(prod.coeff(1)) == 1);  // 2*3 = 6 = 1
    CHECK(std::get<u64>(prod.coeff(2)) == 1);
    CHECK(std::get<u64>(prod.coeff(3)) == 2);
    auto [quot, rem] = Poly::divmod(prod, a);
    CHECK(quot == b);
    CHECK(rem.is_zero());
    CHECK(Poly::exact_div(prod, b) == a);
    CHECK_THROWS_AS(Poly::exact_div(a + Poly::constant(f5, f5->one()), prod), Error);

    // degree of the zero polynomial is -1 (stands for minus infinity)
    Poly z(f5);
    CHECK(z.deg() == -1);
    CHECK((a - a).is_zero());

    // evaluation is a ring homomorphism
    CHECK(std::get<u64>(prod.eval(f5->from_int(2))) ==
          std::get<u64>(f5->mul(a.eval(f5->from_int(2)), b.eval(f5->from_int(2)))));
}
