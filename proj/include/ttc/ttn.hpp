#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ttc/matrix.hpp"

namespace ttc {

enum class ScanMode { Lower, Upper, All };

// A (rows, cols) pair of 1-based strictly increasing index lists.
struct IndexPair {
    std::vector<std::size_t> rows, cols;
    bool operator==(const IndexPair& o) const { return rows == o.rows && cols == o.cols; }
};

struct Verdict {
    bool holds = true;
    // Lexicographically first failing admissible pair; present iff !holds.
    std::optional<IndexPair> witness;
    // Minors up to and including the witness in enumeration order (all of
    // them when the verdict holds); invariant under the thread count.
    u64 minors_checked = 0;
};

// Enumerates admissible (rows, cols) pairs: sizes ascending, then rows and
// cols lexicographic.  Lower mode requires j_r <= i_r, upper j_r >= i_r, all
// enumerates every square submatrix index pair.  Callback returns false to
// stop early.
void for_each_admissible(std::size_t nrows, std::size_t ncols, ScanMode mode,
                         const std::function<bool(const IndexPair&)>& fn);
std::vector<IndexPair> admissible_tuples(std::size_t n, ScanMode mode);

// Checks every admissible submatrix for a nonzero determinant.  Triangular
// modes require a square matrix.  The thread count never changes the result.
Verdict nonsingularity_scan(const Matrix& m, ScanMode mode, unsigned threads = 1);

struct CryerReport {
    Verdict lower;  // L against the lower scan
    Verdict upper;  // U against the upper scan
    bool holds = false;
};
// LU both triangular totally nonsingular (Cryer's property over exact fields).
CryerReport lu_cryer_check(const Matrix& m);

// L[i_1..i_k | j..j+k-1] nonsingular for all 1 <= j <= i_1 < ... < i_k <= n.
Verdict lu_band_check(const Matrix& m);

struct CounterexampleResult {
    Matrix matrix;   // totally nonsingular, over Q
    Matrix lfactor;  // its L-factor, failing the lower scan
    Verdict tns;
    Verdict l_lower;
    u64 candidates_tried = 0;
};
// Searches the template family of the 4x4 fact for a totally nonsingular
// rational matrix whose L-factor fails the lower scan with witness rows
// (3,4), cols (1,3).  SearchExhausted(bound) when the budget runs out.
CounterexampleResult counterexample_search(u64 seed, u64 bound);

struct PrimeResult {
    u64 p = 0;
    Verdict verdict;
};
struct ScanReport {
    std::vector<PrimeResult> results;
    std::optional<u64> minimal_passing;
};
// Reduce an integral matrix over Q modulo every prime in [pmin, pmax] and
// scan each; NonIntegralFamily if entries have denominators.
ScanReport scan_primes(const Matrix& integral, u64 pmin, u64 pmax, ScanMode mode,
                       unsigned threads = 1);

}  // namespace ttc
