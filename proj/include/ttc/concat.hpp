#pragma once

#include "ttc/treecode.hpp"

namespace ttc {

// Alphabet reduction: a tree code over F_{2^ell} of length n, a short binary
// cyclic tree code of input length ell, and a binary block code combine into
// a binary tree code of length ell*(n+1).  Odd output bits carry shifted
// copies of the short code word (short intervals); even bits carry the
// block-encoded long code (long intervals).
struct ConcatSpec {
    TreeCode long_code;   // over F_{2^ell} (or F_2 when ell = 1), width d
    TreeCode short_code;  // binary, cyclic (block-Toeplitz generator), length ell, width d''
    Matrix block_gen;     // binary k x m generator, k = d*ell, m = d*'ell with d*' = d''

    std::size_t ell() const;
    std::size_t d_prime() const { return 2 * short_code.d; }
    std::size_t n_prime() const { return ell() * (long_code.n + 1); }
};

// Random k x m binary generator with exact minimum relative weight >= eps,
// verified over all 2^k - 1 messages; deterministic per seed.
Matrix find_block_code(std::size_t k, std::size_t m, const Rat& eps, u64 seed,
                       unsigned retry_limit = 100000);

struct ConcatResult {
    TreeCode code;  // binary, length n', width d'
    std::size_t ell = 0, d = 0, d_short = 0, d_star = 0;
};

ConcatResult concatenate(const ConcatSpec& spec);

}  // namespace ttc
