#pragma once

#include <optional>

#include "ttc/treecode.hpp"

namespace ttc {

struct GrowthParams {
    u64 q = 2;          // field size (prime power)
    std::size_t d = 2;  // block width
    Rat delta;          // target bound; the code must reach delta-tilde > delta
    std::size_t n = 1;  // input length
    u64 seed = 0;
    unsigned retry_limit = 200;  // verification attempts per step
};

struct EntropyReport {
    bool satisfied = false;
    double value = 0.0;   // log_r(2q) + Ent_r(delta)
    double margin = 0.0;  // 1 - value
};

// Growth-rate budget: log_r(2q) + Ent_r(delta) <= 1 with r = q^d.
// DomainError for delta outside (0, (r-1)/r).
EntropyReport entropy_bound(u64 q, std::size_t d, const Rat& delta);

struct GrowResult {
    TreeCode code;
    DistanceReport dist;      // independently recomputed by brute force
    u64 attempts = 0;         // verification attempts overall
    u64 failures = 0;         // failed attempts
    EntropyReport entropy;    // procedures run best-effort when unsatisfied
};

// Randomized growth: extend a repetition code one input at a time with a
// random mixing vector, verifying the distance after every step and
// resampling on failure (subseed = hash(seed, step, attempt)).
// RetriesExhausted(step) when a step uses up its budget.
GrowResult grow_random(const GrowthParams& params);

// Block-Toeplitz variant: one shot of (n-1) random blocks defines a cyclic
// code; verify and resample wholesale.
GrowResult grow_toeplitz(const GrowthParams& params);

// Deterministic lexicographic scan over all block-Toeplitz first rows
// (ones-block, v_2, ..., v_len); first verified code wins, nullopt when the
// whole space fails.  TooLarge when r^{len-1} > 10^7.
std::optional<GrowResult> exhaustive_short(u64 q, std::size_t d, const Rat& delta,
                                           std::size_t len);

// The field F_q for a prime power q (extension modulus chosen from the seed).
FieldPtr field_for_q(u64 q, u64 seed);

// Block-Toeplitz generator from a first row of len blocks.
Matrix toeplitz_generator(const FieldPtr& F, const std::vector<Scalar>& first_row,
                          std::size_t d);

}  // namespace ttc
