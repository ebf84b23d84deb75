#include "doctest.h"

#include <cmath>

#include "ttc/growth.hpp"

using namespace ttc;

TEST_CASE("entropy bound worked examples") {
    // log_64 4 = 1/3 and Ent_64(1/2) ~ 0.6648 give ~0.9981
    EntropyReport a = entropy_bound(2, 6, Rat(1, 2));
    CHECK(a.satisfied);
    CHECK(std::abs(a.value - 0.9981) < 5e-4);
    CHECK(a.margin > 0);

    // log_4 4 = 1 and Ent_4(1/2) ~ 0.896 give ~1.896
    EntropyReport b = entropy_bound(2, 2, Rat(1, 2));
    CHECK_FALSE(b.satisfied);
    CHECK(std::abs(b.value - 1.896) < 5e-3);

    CHECK_THROWS_AS(entropy_bound(2, 2, Rat(9, 10)), DomainError);  // >= (r-1)/r
    CHECK_THROWS_AS(entropy_bound(2, 2, Rat(0)), DomainError);
}

TEST_CASE("grow_random base case and growth") {
    GrowthParams params;
    params.q = 2;
    params.d = 6;
    params.delta = Rat(1, 2);
    params.n = 1;
    params.seed = 5;
    GrowResult base = grow_random(params);
    CHECK(base.code.n == 1);
    CHECK(base.dist.delta == Rat(1));  // repetition code

    params.n = 4;
    params.seed = 42;
    params.retry_limit = 500;
    GrowResult grown = grow_random(params);
    CHECK(grown.code.n == 4);
    CHECK(grown.dist.delta > Rat(1, 2));
    // independent recomputation confirms the claimed distance
    CHECK(min_rel_distance(grown.code).delta == grown.dist.delta);
    CHECK(grown.entropy.satisfied);

    // determinism
    GrowResult again = grow_random(params);
    CHECK(again.code.gen == grown.code.gen);
    CHECK(again.attempts == grown.attempts);

    params.retry_limit = 0;
    CHECK_THROWS_AS(grow_random(params), RetriesExhausted);
}

TEST_CASE("grow_toeplitz structure and cyclicity") {
    GrowthParams params;
    params.q = 2;
    params.d = 6;
    params.delta = Rat(1, 2);
    params.n = 4;
    params.seed = 7;
    params.retry_limit = 500;
    GrowResult r = grow_toeplitz(params);
    CHECK(r.dist.delta > Rat(1, 2));

    const Matrix& g = r.code.gen;
    const FieldPtr& F = r.code.field;
    // row i is row 1 shifted by d(i-1)
    for (std::size_t i = 1; i < r.code.n; ++i)
        for (std::size_t j = 0; j < 6 * (r.code.n - i); ++j)
            CHECK(F->eq(g.at(i, 6 * i + j), g.at(0, j)));

    // shift-closure: for codeword v, (0, v restricted) is a codeword;
    // check via the parity-check product on shifted generator rows
    NormalFormPcheck pc = pcheck_from_generator(r.code);
    std::size_t dn = 6 * r.code.n;
    for (std::size_t i = 0; i < r.code.n; ++i) {
        std::vector<Scalar> shifted(dn, F->zero());
        for (std::size_t j = 0; j < dn - 6; ++j) shifted[j + 6] = g.at(i, j);
        Matrix row(F, 1, dn);
        for (std::size_t j = 0; j < dn; ++j) row.set(0, j, shifted[j]);
        CHECK((row * pc.m.transpose()).is_zero());
    }
}

TEST_CASE("exhaustive_short examples") {
    // len = 1: the repetition generator is found immediately
    auto r1 = exhaustive_short(2, 6, Rat(1, 2), 1);
    REQUIRE(r1.has_value());
    CHECK(r1->attempts == 1);
    CHECK(r1->dist.delta == Rat(1));

    // rate-1 codes cannot beat 1/2 at length 2: full scan says NotFound
    auto r2 = exhaustive_short(2, 1, Rat(1, 2), 2);
    CHECK_FALSE(r2.has_value());

    // q=2, d=6, len=3: deterministic scan of 64^2 candidates
    auto r3 = exhaustive_short(2, 6, Rat(1, 2), 3);
    auto r3b = exhaustive_short(2, 6, Rat(1, 2), 3);
    REQUIRE(r3.has_value());
    CHECK(r3->dist.delta > Rat(1, 2));
    CHECK(r3->attempts == r3b->attempts);
    CHECK(r3->code.gen == r3b->code.gen);
    CHECK(min_rel_distance(r3->code).delta == r3->dist.delta);

    CHECK_THROWS_AS(exhaustive_short(2, 6, Rat(1, 2), 6), TooLarge);  // 64^5 > 10^7
}

TEST_CASE("prime power fields for growth") {
    FieldPtr f4 = field_for_q(4, 1);
    CHECK(f4->kind() == FieldKind::Extension);
    CHECK(*f4->size() == 4);
    CHECK_THROWS_AS(field_for_q(6, 1), DomainError);

    GrowthParams params;
    params.q = 4;
    params.d = 3;
    params.delta = Rat(1, 2);
    params.n = 3;
    params.seed = 11;
    params.retry_limit = 200;
    GrowResult r = grow_random(params);
    CHECK(r.dist.delta > Rat(1, 2));
}

TEST_CASE("per-step failure rate stays under the union bound at n = 5") {
    // Pooled single-attempt failure frequency against sum 2^-k (k <= 4) with
    // 3-sigma slack.  Measured single-attempt success rates collapse with the
    // window count (about 30% at step 4, 4% at step 5, below 1/2000 at step
    // 6), so length 5 is where the bound still has teeth; see the README
    // remark on the growth budget.
    u64 attempts = 0, failures = 0;
    for (u64 seed = 0; seed < 200; ++seed) {
        GrowthParams params;
        params.q = 2;
        params.d = 6;
        params.delta = Rat(1, 2);
        params.n = 5;
        params.seed = seed;
        params.retry_limit = 2000;
        GrowResult r = grow_random(params);
        attempts += r.attempts;
        failures += r.failures;
    }
    double bound = 0;
    for (int k = 1; k <= 4; ++k) bound += std::pow(2.0, -k);
    double rate = static_cast<double>(failures) / static_cast<double>(attempts);
    double sigma = 0.5 / std::sqrt(static_cast<double>(attempts));
    CHECK(rate <= bound + 3 * sigma);
}
