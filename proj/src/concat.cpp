#include "ttc/concat.hpp"

#include "ttc/rng.hpp"

namespace ttc {

namespace {

void require_binary(const FieldPtr& F, const char* what) {
    if (F->kind() != FieldKind::Prime || F->characteristic() != 2)
        throw AlphabetMismatch(std::string(what) + " must be over F_2");
}

// Polynomial-basis bits of one element of F_{2^ell} (ell = 1 covers F_2).
std::vector<u64> element_bits(const FieldPtr& F, const Scalar& s) {
    if (F->kind() == FieldKind::Prime) return {std::get<u64>(s)};
    return std::get<ExtElem>(s);
}

bool is_block_toeplitz(const TreeCode& code) {
    const Matrix& g = code.gen;
    const FieldPtr& F = code.field;
    std::size_t d = code.d;
    for (std::size_t i = 1; i < code.n; ++i)
        for (std::size_t j = 0; j < d * (code.n - i); ++j)
            if (!F->eq(g.at(i, d * i + j), g.at(0, j))) return false;
    return true;
}

}  // namespace

std::size_t ConcatSpec::ell() const {
    return long_code.field->kind() == FieldKind::Extension ? long_code.field->degree() : 1;
}

Matrix find_block_code(std::size_t k, std::size_t m, const Rat& eps, u64 seed,
                       unsigned retry_limit) {
    if (k == 0 || m == 0) throw DomainError("block code dimensions must be positive");
    if (k > 20 || (1ULL << k) > 1000000ULL) throw TooLarge("message space exceeds 10^6");
    FieldPtr F2 = Field::prime(2);
    for (unsigned attempt = 0; attempt < retry_limit; ++attempt) {
        SplitMix64 rng(mix_seed(seed, 0x6C0DE, attempt));
        std::vector<std::vector<u64>> rows(k, std::vector<u64>(m, 0));
        for (auto& row : rows)
            for (auto& bit : row) bit = rng.below(2);
        bool good = true;
        for (u64 msg = 1; msg < (1ULL << k) && good; ++msg) {
            std::size_t wt = 0;
            for (std::size_t j = 0; j < m; ++j) {
                u64 bit = 0;
                for (std::size_t i = 0; i < k; ++i)
                    if ((msg >> i) & 1) bit ^= rows[i][j];
                wt += bit;
            }
            Rat rel(static_cast<long>(wt), static_cast<long>(m));
            rel.canonicalize();
            if (rel < eps) good = false;
        }
        if (!good) continue;
        Matrix gen(F2, k, m);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < m; ++j) gen.set(i, j, rows[i][j]);
        return gen;
    }
    throw RetriesExhausted(0);
}

ConcatResult concatenate(const ConcatSpec& spec) {
    const TreeCode& c = spec.long_code;
    const TreeCode& a = spec.short_code;
    const FieldPtr& FL = c.field;
    if (FL->characteristic() != 2)
        throw AlphabetMismatch("long code must live in characteristic 2");
    require_binary(a.field, "short code");
    require_binary(spec.block_gen.field(), "block code");
    const std::size_t ell = spec.ell();
    const std::size_t d = c.d;
    const std::size_t dpp = a.d;  // d''
    if (a.n != ell)
        throw AlphabetMismatch("short code input length must equal ell");
    if (!is_block_toeplitz(a))
        throw DomainError("short code must be cyclic (block-Toeplitz generator)");
    if (spec.block_gen.rows() != d * ell)
        throw LengthOverflow("block code must encode d*ell bits");
    if (spec.block_gen.cols() % ell != 0)
        throw LengthOverflow("block code length must be a multiple of ell");
    const std::size_t dstar = spec.block_gen.cols() / ell;
    if (dstar != dpp)
        throw LengthOverflow("block width d* must match the short code width d''");

    const std::size_t np = ell * (c.n + 1);
    const std::size_t dp = 2 * dpp;
    FieldPtr F2 = a.field;
    Matrix gen(F2, np, dp * np);

    // a(e_1) as bits; row 1 of the short generator
    std::vector<u64> abits;
    for (std::size_t j = 0; j < dpp * ell; ++j) abits.push_back(std::get<u64>(a.gen.at(0, j)));

    // x^(j-1) multipliers in the long field
    std::vector<Scalar> xpow(ell);
    xpow[0] = FL->one();
    if (ell > 1) {
        ExtElem x(ell, 0);
        x[1] = 1;
        for (std::size_t j = 1; j < ell; ++j) xpow[j] = FL->mul(xpow[j - 1], Scalar{x});
    }

    for (std::size_t i = 1; i <= np; ++i) {
        const std::size_t k = (i - 1) / ell;
        const std::size_t j = i - ell * k;  // 1..ell
        // odd bits: a(e_1) starting at bit d'(i-1)+1, truncated at the edge
        for (std::size_t s = 0; s < dpp * ell; ++s) {
            std::size_t g = i + s / dpp;  // global block, 1-based
            if (g > np) break;
            if (abits[s] == 0) continue;
            std::size_t col = (g - 1) * dp + 2 * (s % dpp);  // 0-based odd position
            gen.set(i - 1, col, F2->one());
        }
        // even bits: f-encoded long-code word, shifted by one ell-group
        if (k < c.n) {
            for (std::size_t t = 1; t <= c.n; ++t) {
                // bits of Sigma-block t of x^(j-1) * c(e_{k+1})
                std::vector<u64> u(d * ell, 0);
                bool nonzero = false;
                for (std::size_t e = 0; e < d; ++e) {
                    Scalar w = FL->mul(xpow[j - 1], c.gen.at(k, d * (t - 1) + e));
                    std::vector<u64> bits = element_bits(FL, w);
                    for (std::size_t b = 0; b < ell; ++b) {
                        u[e * ell + b] = bits[b];
                        if (bits[b]) nonzero = true;
                    }
                }
                if (!nonzero) continue;
                // encode with the block code
                for (std::size_t s = 0; s < dstar * ell; ++s) {
                    u64 bit = 0;
                    for (std::size_t r = 0; r < d * ell; ++r)
                        if (u[r]) bit ^= std::get<u64>(spec.block_gen.at(r, s));
                    if (bit == 0) continue;
                    std::size_t g = t * ell + 1 + s / dstar;  // global block
                    std::size_t col = (g - 1) * dp + 2 * (s % dstar) + 1;  // even position
                    if (col >= dp * np)
                        throw LengthOverflow("encoded block falls outside the code word");
                    gen.set(i - 1, col, F2->one());
                }
            }
        }
    }

    ConcatResult result{TreeCode::from_generator(std::move(gen), dp), ell, d, dpp, dstar};
    return result;
}

}  // namespace ttc
