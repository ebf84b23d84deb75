#include "ttc/growth.hpp"

#include <cmath>

#include "ttc/modarith.hpp"
#include "ttc/poly.hpp"
#include "ttc/rng.hpp"

namespace ttc {

FieldPtr field_for_q(u64 q, u64 seed) {
    if (q < 2) throw DomainError("field size must be at least 2");
    if (is_prime_u64(q)) return Field::prime(q);
    // prime power: find p and k
    u64 p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) break;
    }
    u64 rest = q;
    std::size_t k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw DomainError(std::to_string(q) + " is not a prime power");
    Poly f = find_irreducible(p, k, mix_seed(seed, 0x66));
    std::vector<u64> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(std::get<u64>(c));
    return Field::extension(p, coeffs);
}

EntropyReport entropy_bound(u64 q, std::size_t d, const Rat& delta) {
    double r = std::pow(static_cast<double>(q), static_cast<double>(d));
    double x = delta.get_d();
    if (!(x > 0.0) || !(x < (r - 1.0) / r))
        throw DomainError("delta must lie in (0, (r-1)/r)");
    double logr = std::log(r);
    double ent = x * std::log(r - 1.0) / logr - x * std::log(x) / logr -
                 (1.0 - x) * std::log(1.0 - x) / logr;
    double value = std::log(2.0 * static_cast<double>(q)) / logr + ent;
    EntropyReport rep;
    rep.value = value;
    rep.margin = 1.0 - value;
    rep.satisfied = value <= 1.0 + 1e-12;
    return rep;
}

namespace {

std::vector<Scalar> random_blocks(const FieldPtr& F, std::size_t count, SplitMix64& rng) {
    u64 q = *F->size();
    std::vector<Scalar> v;
    v.reserve(count);
    for (std::size_t i = 0; i < count; ++i) v.push_back(F->element_at(rng.below(q)));
    return v;
}

Matrix ones_row(const FieldPtr& F, std::size_t d) {
    Matrix m(F, 1, d);
    for (std::size_t j = 0; j < d; ++j) m.set(0, j, F->one());
    return m;
}

}  // namespace

Matrix toeplitz_generator(const FieldPtr& F, const std::vector<Scalar>& first_row,
                          std::size_t d) {
    if (first_row.size() % d != 0 || first_row.empty())
        throw DomainError("first row must consist of whole blocks");
    std::size_t n = first_row.size() / d;
    Matrix gen(F, n, d * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d * (n - i); ++j)
            gen.set(i, d * i + j, first_row[j]);
    return gen;
}

GrowResult grow_random(const GrowthParams& params) {
    FieldPtr F = field_for_q(params.q, params.seed);
    EntropyReport ent = entropy_bound(params.q, params.d, params.delta);
    const std::size_t d = params.d;

    TreeCode code = TreeCode::from_generator(ones_row(F, d), d);  // repetition, n = 1
    u64 attempts = 0, failures = 0;
    for (std::size_t step = 2; step <= params.n; ++step) {
        bool grown = false;
        for (unsigned attempt = 0; attempt < params.retry_limit; ++attempt) {
            SplitMix64 rng(mix_seed(params.seed, step, attempt));
            std::vector<Scalar> v = random_blocks(F, d * (step - 1), rng);
            Matrix gen(F, step, d * step);
            for (std::size_t j = 0; j < d; ++j) gen.set(0, j, F->one());
            for (std::size_t j = 0; j < v.size(); ++j) gen.set(0, d + j, v[j]);
            for (std::size_t i = 0; i < step - 1; ++i)
                for (std::size_t j = 0; j < d * (step - 1); ++j)
                    gen.set(i + 1, d + j, code.gen.at(i, j));
            TreeCode candidate = TreeCode::from_generator(std::move(gen), d);
            ++attempts;
            DistanceReport rep = min_rel_distance(candidate, WeightMode::F);
            if (rep.delta > params.delta) {
                code = std::move(candidate);
                grown = true;
                break;
            }
            ++failures;
        }
        if (!grown) throw RetriesExhausted(step);
    }
    DistanceReport final_rep = min_rel_distance(code, WeightMode::F);
    return GrowResult{std::move(code), std::move(final_rep), attempts, failures, ent};
}

GrowResult grow_toeplitz(const GrowthParams& params) {
    FieldPtr F = field_for_q(params.q, params.seed);
    EntropyReport ent = entropy_bound(params.q, params.d, params.delta);
    const std::size_t d = params.d;

    u64 attempts = 0, failures = 0;
    for (unsigned attempt = 0; attempt < params.retry_limit; ++attempt) {
        SplitMix64 rng(mix_seed(params.seed, 0, attempt));
        std::vector<Scalar> first;
        for (std::size_t j = 0; j < d; ++j) first.push_back(F->one());
        // only (n-1) d log q random bits per attempt
        std::vector<Scalar> tail = random_blocks(F, d * (params.n - 1), rng);
        first.insert(first.end(), tail.begin(), tail.end());
        TreeCode candidate = TreeCode::from_generator(toeplitz_generator(F, first, d), d);
        ++attempts;
        DistanceReport rep = min_rel_distance(candidate, WeightMode::F);
        if (rep.delta > params.delta)
            return GrowResult{std::move(candidate), std::move(rep), attempts, failures, ent};
        ++failures;
    }
    throw RetriesExhausted(params.n);
}

std::optional<GrowResult> exhaustive_short(u64 q, std::size_t d, const Rat& delta,
                                           std::size_t len) {
    FieldPtr F = field_for_q(q, 0);
    EntropyReport ent{};
    // entropy bound is advisory here; the scan is exhaustive either way
    double r = std::pow(static_cast<double>(q), static_cast<double>(d));
    if (delta.get_d() > 0 && delta.get_d() < (r - 1.0) / r) ent = entropy_bound(q, d, delta);

    unsigned __int128 space = 1;
    for (std::size_t i = 0; i < d * (len - 1); ++i) {
        space *= q;
        if (space > 10000000) throw TooLarge("candidate space exceeds 10^7");
    }
    u64 total = static_cast<u64>(space);
    u64 attempts = 0;
    for (u64 idx = 0; idx < total; ++idx) {
        // digits of idx in base q, first coordinate of v_2 most significant
        std::vector<Scalar> first;
        for (std::size_t j = 0; j < d; ++j) first.push_back(F->one());
        u64 rest = idx;
        std::vector<u64> digits(d * (len - 1), 0);
        for (std::size_t pos = digits.size(); pos-- > 0;) {
            digits[pos] = rest % q;
            rest /= q;
        }
        for (u64 dg : digits) first.push_back(F->element_at(dg));
        TreeCode candidate = TreeCode::from_generator(toeplitz_generator(F, first, d), d);
        ++attempts;
        DistanceReport rep = min_rel_distance(candidate, WeightMode::F);
        if (rep.delta > delta)
            return GrowResult{std::move(candidate), std::move(rep), attempts, 0, ent};
    }
    return std::nullopt;
}

}  // namespace ttc
