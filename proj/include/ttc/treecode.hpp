#pragma once

#include <optional>
#include <vector>

#include "ttc/matrix.hpp"
#include "ttc/ttn.hpp"

namespace ttc {

// Rate-1/d linear tree code, held by its n x dn generator matrix: block upper
// triangular with 1 x d blocks, nonzero blocks on the diagonal.  An optional
// parity-check matrix ((d-1)n x dn) can be attached; it is validated against
// the generator.
struct TreeCode {
    FieldPtr field;
    std::size_t n = 0;  // input length
    std::size_t d = 0;  // block width; rate 1/d
    Matrix gen;
    std::optional<Matrix> pcheck;

    static TreeCode from_generator(Matrix gen, std::size_t d);
    void attach_pcheck(Matrix pc);
};

// Parity-check matrix in normal form: lower block triangular with (d-1) x d
// blocks whose diagonal blocks have full rank d-1.
struct NormalFormPcheck {
    Matrix m;
    std::size_t n = 0;
    std::size_t d = 0;

    // Validates the claimed normal form (shape, block triangularity, diagonal
    // block ranks).
    static NormalFormPcheck validate(Matrix m, std::size_t d);
};

enum class WeightMode { F, Sigma };
enum class DistMethod { Bruteforce, Pcheck };

struct DistanceReport {
    Rat delta;                    // exact minimal ratio
    std::size_t k = 0, l = 0;     // witness window (k, l]
    std::vector<Scalar> segment;  // codeword restricted to blocks k+1..l
    WeightMode mode = WeightMode::F;
};

// Minimum relative distance.  Bruteforce enumerates all |F|^n - 1 nonzero
// messages (requires |F|^n <= 10^7); Pcheck uses the dependent-column
// characterization on a rate-1/2 normal-form parity check (WrongRate for
// d != 2).  Both are exact.
DistanceReport min_rel_distance(const TreeCode& code, WeightMode mode = WeightMode::F,
                                DistMethod method = DistMethod::Bruteforce);
DistanceReport min_rel_distance_pcheck(const NormalFormPcheck& pc);

// Row-reduces an arbitrary parity-check matrix into normal form.
// PropertyStarViolated(k) when the last dk columns have the wrong rank.
NormalFormPcheck normalize_pcheck(const Matrix& m, std::size_t d);

// Rebuilds a generator from a normal-form parity check (back-to-front
// construction); the result is orthogonal to the input.
TreeCode generator_from_pcheck(const NormalFormPcheck& pc);

// Dual-space basis of the generator, then normalize_pcheck.
NormalFormPcheck pcheck_from_generator(const TreeCode& code);

// Odd columns from T, even columns from I_n (no validation of T's diagonal).
Matrix interleave_with_identity(const Matrix& t);
// Same, as a checked normal-form parity check; ZeroDiagonal(i) if t_ii = 0.
NormalFormPcheck interleave_pcheck(const Matrix& t);

struct ExtractResult {
    Matrix t;                                // lower triangular
    std::vector<std::size_t> swapped_blocks; // 1-based blocks where columns swapped
};
// Column swaps within block pairs establish nonzero even-diagonal entries,
// then row elimination and scaling reduce M to T interleaved with I_n.
ExtractResult extract_triangular(const NormalFormPcheck& pc);

enum class MdsMethod { Columns, Distance };

struct MdsVerdict {
    bool mds = false;
    MdsMethod method = MdsMethod::Columns;
    // Columns method: first dependent column tuple (1-based), present iff !mds.
    std::optional<std::vector<std::size_t>> witness;
    u64 tuples_checked = 0;
    // Distance method: the exact distance found.
    std::optional<Rat> delta;
};

// MDS test for rate-1/2 codes: columns method enumerates every n-tuple
// j_1 < ... < j_n with j_i <= 2i and tests independence; distance method
// compares the brute-force distance against 1/2.
MdsVerdict is_mds(const NormalFormPcheck& pc, MdsMethod method = MdsMethod::Columns);

// All increasing n-tuples with j_i <= 2i (the MDS column condition).
std::vector<std::vector<std::size_t>> mds_column_tuples(std::size_t n);

// MDS generator from a lower triangular totally nonsingular T: odd columns
// from (T^-1)^T, even columns from -I_n.  NotTTN (with witness) otherwise.
TreeCode mds_generator(const Matrix& t);

}  // namespace ttc
