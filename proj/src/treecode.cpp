#include "ttc/treecode.hpp"

#include <algorithm>

namespace ttc {

namespace {

void validate_generator(const Matrix& gen, std::size_t n, std::size_t d) {
    const FieldPtr& F = gen.field();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d * i; ++j)
            if (!F->is_zero(gen.at(i, j)))
                throw DomainError("generator is not block upper triangular");
        bool diag_nonzero = false;
        for (std::size_t j = d * i; j < d * (i + 1); ++j)
            if (!F->is_zero(gen.at(i, j))) diag_nonzero = true;
        if (!diag_nonzero)
            throw DomainError("generator diagonal block " + std::to_string(i + 1) + " is zero");
    }
}

}  // namespace

TreeCode TreeCode::from_generator(Matrix gen, std::size_t d) {
    if (d == 0) throw DomainError("block width d must be positive");
    if (gen.cols() != gen.rows() * d)
        throw DomainError("generator must have shape n x dn");
    TreeCode c{gen.field(), gen.rows(), d, std::move(gen), std::nullopt};
    validate_generator(c.gen, c.n, c.d);
    return c;
}

void TreeCode::attach_pcheck(Matrix pc) {
    check_same_field(field, pc.field());
    if (d < 2) throw WrongRate("parity-check matrices need d >= 2");
    if (pc.rows() != (d - 1) * n || pc.cols() != d * n)
        throw DomainError("parity check must have shape (d-1)n x dn");
    if (!(gen * pc.transpose()).is_zero())
        throw DomainError("generator and parity check are not orthogonal");
    if (gen.rank() != n || pc.rank() != (d - 1) * n)
        throw RankDeficient("generator or parity check loses rank");
    pcheck = std::move(pc);
}

NormalFormPcheck NormalFormPcheck::validate(Matrix m, std::size_t d) {
    if (d < 2) throw WrongRate("normal form needs d >= 2");
    if (m.cols() % d != 0) throw DomainError("column count must be a multiple of d");
    std::size_t n = m.cols() / d;
    if (m.rows() != (d - 1) * n) throw DomainError("normal form must have shape (d-1)n x dn");
    const FieldPtr& F = m.field();
    for (std::size_t b = 0; b < n; ++b) {
        // rows of block b must vanish right of column block b
        for (std::size_t i = (d - 1) * b; i < (d - 1) * (b + 1); ++i)
            for (std::size_t j = d * (b + 1); j < m.cols(); ++j)
                if (!F->is_zero(m.at(i, j)))
                    throw DomainError("matrix is not lower block triangular");
        std::vector<std::size_t> rows1, cols1;
        for (std::size_t i = (d - 1) * b; i < (d - 1) * (b + 1); ++i) rows1.push_back(i + 1);
        for (std::size_t j = d * b; j < d * (b + 1); ++j) cols1.push_back(j + 1);
        if (m.submatrix(rows1, cols1).rank() != d - 1) throw PropertyStarViolated(b + 1);
    }
    return NormalFormPcheck{std::move(m), n, d};
}

namespace {

// Shared enumeration kernel: visits every nonzero message x (odometer over
// field-element indices, first coordinate most significant) with its
// codeword, and feeds per-block weights to the minimizer.
struct WindowMin {
    std::optional<Rat> best;
    std::size_t k = 0, l = 0;
    std::vector<Scalar> segment;
};

DistanceReport bruteforce_distance(const TreeCode& code, WeightMode mode) {
    const FieldPtr& F = code.field;
    auto size = F->size();
    if (!size) throw TooLarge("brute-force distance needs a finite field");
    // |F|^n <= 10^7
    unsigned __int128 total = 1;
    for (std::size_t i = 0; i < code.n; ++i) {
        total *= *size;
        if (total > 10000000) throw TooLarge("message space exceeds 10^7");
    }
    const std::size_t n = code.n, d = code.d;
    WindowMin wm;
    std::vector<u64> digits(n, 0);
    std::vector<Scalar> word(n * d, F->zero());
    for (u64 idx = 1; idx < static_cast<u64>(total); ++idx) {
        // next message in lexicographic order (x_1 most significant)
        std::size_t pos = n;
        while (pos-- > 0) {
            if (++digits[pos] < *size) break;
            digits[pos] = 0;
        }
        // codeword = sum of scaled generator rows over the support
        std::fill(word.begin(), word.end(), F->zero());
        std::size_t first_block = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (digits[i] == 0) continue;
            if (first_block == n) first_block = i;
            Scalar xi = F->element_at(digits[i]);
            for (std::size_t j = d * i; j < n * d; ++j)
                word[j] = F->add(word[j], F->mul(xi, code.gen.at(i, j)));
        }
        std::size_t k = first_block;  // codeword blocks 1..k are zero
        u64 acc = 0;
        for (std::size_t l = k + 1; l <= n; ++l) {
            u64 block_wt = 0;
            for (std::size_t j = d * (l - 1); j < d * l; ++j)
                if (!F->is_zero(word[j])) ++block_wt;
            acc += mode == WeightMode::F ? block_wt : (block_wt > 0 ? 1 : 0);
            Rat ratio = mode == WeightMode::F
                            ? Rat(static_cast<long>(acc), static_cast<long>(d * (l - k)))
                            : Rat(static_cast<long>(acc), static_cast<long>(l - k));
            ratio.canonicalize();
            if (!wm.best || ratio < *wm.best) {
                wm.best = ratio;
                wm.k = k;
                wm.l = l;
                wm.segment.assign(word.begin() + d * k, word.begin() + d * l);
            }
        }
    }
    DistanceReport rep{*wm.best, wm.k, wm.l, std::move(wm.segment), mode};
    return rep;
}

}  // namespace

DistanceReport min_rel_distance_pcheck(const NormalFormPcheck& pc) {
    if (pc.d != 2) throw WrongRate("the parity-check distance method needs rate 1/2");
    const Matrix& M = pc.m;
    const FieldPtr& F = M.field();
    const std::size_t n = pc.n;
    WindowMin wm;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
            std::size_t w = 2 * (l - k);  // columns 2k+1 .. 2l
            std::vector<std::size_t> rows1;
            for (std::size_t r = k + 1; r <= l; ++r) rows1.push_back(r);
            bool done_kl = false;
            for (std::size_t t = 1; t <= w && !done_kl; ++t) {
                Rat ratio(static_cast<long>(t), static_cast<long>(2 * (l - k)));
                ratio.canonicalize();
                if (wm.best && ratio >= *wm.best) break;  // larger t only gets worse
                // subsets of {2k+1..2l} of size t with j_1 <= 2k+2
                std::vector<std::size_t> sel(t);
                for (std::size_t i = 0; i < t; ++i) sel[i] = i + 1;  // offsets into window
                do {
                    if (sel[0] > 2) continue;  // j_1 <= 2k+2
                    std::vector<std::size_t> cols1(t);
                    for (std::size_t i = 0; i < t; ++i) cols1[i] = 2 * k + sel[i];
                    Matrix A = M.submatrix(rows1, cols1);
                    bool dependent;
                    if (t == 1) {
                        dependent = A.is_zero();
                    } else {
                        std::vector<std::size_t> rest;
                        for (std::size_t i = 2; i <= t; ++i) rest.push_back(i);
                        std::vector<std::size_t> all_rows;
                        for (std::size_t i = 1; i <= rows1.size(); ++i) all_rows.push_back(i);
                        dependent = A.submatrix(all_rows, rest).rank() == A.rank();
                    }
                    if (!dependent) continue;
                    // reconstruct the witness segment from a dependency with
                    // nonzero first coefficient
                    std::vector<Scalar> segment(w, F->zero());
                    Matrix null = A.nullspace();
                    for (std::size_t r = 0; r < null.rows(); ++r) {
                        if (!F->is_zero(null.at(r, 0))) {
                            for (std::size_t i = 0; i < t; ++i)
                                segment[sel[i] - 1] = null.at(r, i);
                            break;
                        }
                    }
                    wm.best = ratio;
                    wm.k = k;
                    wm.l = l;
                    wm.segment = std::move(segment);
                    done_kl = true;  // minimal t for this (k,l); move on
                    break;
                } while ([&] {
                    // next size-t subset of the window
                    for (std::size_t i = t; i-- > 0;) {
                        if (sel[i] < w - (t - 1 - i)) {
                            ++sel[i];
                            for (std::size_t j2 = i + 1; j2 < t; ++j2) sel[j2] = sel[j2 - 1] + 1;
                            return true;
                        }
                    }
                    return false;
                }());
            }
        }
    }
    if (!wm.best) throw DomainError("no dependent column set found; invalid parity check");
    return DistanceReport{*wm.best, wm.k, wm.l, std::move(wm.segment), WeightMode::F};
}

DistanceReport min_rel_distance(const TreeCode& code, WeightMode mode, DistMethod method) {
    if (method == DistMethod::Bruteforce) return bruteforce_distance(code, mode);
    if (mode == WeightMode::Sigma)
        throw DomainError("the parity-check method computes the F-weight distance");
    if (code.d != 2) throw WrongRate("the parity-check distance method needs rate 1/2");
    if (code.pcheck) return min_rel_distance_pcheck(normalize_pcheck(*code.pcheck, code.d));
    return min_rel_distance_pcheck(pcheck_from_generator(code));
}

NormalFormPcheck normalize_pcheck(const Matrix& m, std::size_t d) {
    if (d < 2) throw WrongRate("normal form needs d >= 2");
    if (m.cols() % d != 0) throw DomainError("column count must be a multiple of d");
    const std::size_t n = m.cols() / d;
    if (m.rows() != (d - 1) * n)
        throw RankDeficient("parity check must have (d-1)n rows");
    const FieldPtr& F = m.field();

    // Row vectors we still may pick pivots from, in original order.
    std::vector<std::vector<Scalar>> work(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        work[i].reserve(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) work[i].push_back(m.at(i, j));
    }
    std::vector<bool> assigned(m.rows(), false);
    // blocks filled bottom-up; block_rows[b] lists row indices for block b+1
    std::vector<std::vector<std::size_t>> block_rows(n);

    for (std::size_t k = 1; k <= n; ++k) {
        std::size_t col_lo = m.cols() - d * k;
        std::size_t col_hi = m.cols() - d * (k - 1);
        std::vector<std::size_t> pivots;
        for (std::size_t c = col_lo; c < col_hi; ++c) {
            std::size_t pr = m.rows();
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (assigned[i]) continue;
                if (std::find(pivots.begin(), pivots.end(), i) != pivots.end()) continue;
                if (!F->is_zero(work[i][c])) {
                    pr = i;
                    break;
                }
            }
            if (pr == m.rows()) continue;
            Scalar inv = F->inv(work[pr][c]);
            for (std::size_t j = 0; j < m.cols(); ++j) work[pr][j] = F->mul(work[pr][j], inv);
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (assigned[i] || i == pr) continue;
                if (F->is_zero(work[i][c])) continue;
                Scalar factor = work[i][c];
                for (std::size_t j = 0; j < m.cols(); ++j)
                    work[i][j] = F->sub(work[i][j], F->mul(factor, work[pr][j]));
            }
            pivots.push_back(pr);
        }
        if (pivots.size() != d - 1) throw PropertyStarViolated(k);
        for (std::size_t i : pivots) assigned[i] = true;
        block_rows[n - k] = pivots;
    }
    for (bool a : assigned)
        if (!a) throw RankDeficient("parity check does not have full rank");

    Matrix out(F, m.rows(), m.cols());
    std::size_t r = 0;
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t i : block_rows[b]) {
            for (std::size_t j = 0; j < m.cols(); ++j) out.set(r, j, work[i][j]);
            ++r;
        }
    return NormalFormPcheck::validate(std::move(out), d);
}

TreeCode generator_from_pcheck(const NormalFormPcheck& pc) {
    const Matrix& M = pc.m;
    const FieldPtr& F = M.field();
    const std::size_t n = pc.n, d = pc.d;

    // suffixes[k] is c(e_{n-k}) restricted to the last d(k+1) coordinates
    std::vector<std::vector<Scalar>> suffixes;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t width = d * (k + 1);
        std::vector<std::size_t> cols1;
        for (std::size_t j = M.cols() - width; j < M.cols(); ++j) cols1.push_back(j + 1);
        std::vector<std::size_t> rows1;
        for (std::size_t i = 0; i < M.rows(); ++i) rows1.push_back(i + 1);
        Matrix null = M.submatrix(rows1, cols1).nullspace();
        if (null.rows() != k + 1)
            throw PropertyStarViolated(k + 1);
        // pick the first basis vector independent of the current suffixes
        std::optional<std::size_t> choice;
        for (std::size_t cand = 0; cand < null.rows() && !choice; ++cand) {
            // stack [prev suffixes (zero-padded); candidate] and rank-test
            std::vector<std::vector<Scalar>> rows;
            for (const auto& s : suffixes) {
                std::vector<Scalar> padded(width, F->zero());
                std::copy(s.begin(), s.end(), padded.end() - s.size());
                rows.push_back(std::move(padded));
            }
            std::vector<Scalar> c(width);
            for (std::size_t j = 0; j < width; ++j) c[j] = null.at(cand, j);
            rows.push_back(std::move(c));
            if (Matrix::from_rows(F, rows).rank() == rows.size()) choice = cand;
        }
        if (!choice) throw RankDeficient("no independent nullspace vector found");
        std::vector<Scalar> u(width);
        for (std::size_t j = 0; j < width; ++j) u[j] = null.at(*choice, j);
        bool head_nonzero = false;
        for (std::size_t j = 0; j < d; ++j)
            if (!F->is_zero(u[j])) head_nonzero = true;
        if (!head_nonzero)
            throw RankDeficient("independent nullspace vector has a zero leading block");
        suffixes.push_back(std::move(u));
    }

    Matrix gen(F, n, d * n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t row = n - 1 - k;  // suffixes[k] is the row for e_{n-k}
        const auto& s = suffixes[k];
        for (std::size_t j = 0; j < s.size(); ++j)
            gen.set(row, d * n - s.size() + j, s[j]);
    }
    TreeCode code = TreeCode::from_generator(std::move(gen), d);
    code.attach_pcheck(M);
    return code;
}

NormalFormPcheck pcheck_from_generator(const TreeCode& code) {
    if (code.d < 2) throw WrongRate("parity checks need d >= 2");
    Matrix dual = code.gen.nullspace();
    return normalize_pcheck(dual, code.d);
}

Matrix interleave_with_identity(const Matrix& t) {
    if (t.rows() != t.cols()) throw NotSquare();
    const FieldPtr& F = t.field();
    const std::size_t n = t.rows();
    Matrix m(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.set(i, 2 * j, t.at(i, j));
            if (i == j) m.set(i, 2 * j + 1, F->one());
        }
    }
    return m;
}

NormalFormPcheck interleave_pcheck(const Matrix& t) {
    if (t.rows() != t.cols()) throw NotSquare();
    const FieldPtr& F = t.field();
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = i + 1; j < t.cols(); ++j)
            if (!F->is_zero(t.at(i, j)))
                throw DomainError("interleave_pcheck expects a lower triangular matrix");
        if (F->is_zero(t.at(i, i))) throw ZeroDiagonal(i + 1);
    }
    return NormalFormPcheck::validate(interleave_with_identity(t), 2);
}

ExtractResult extract_triangular(const NormalFormPcheck& pc) {
    if (pc.d != 2) throw WrongRate("extract_triangular needs rate 1/2");
    Matrix m = pc.m;
    const FieldPtr& F = m.field();
    const std::size_t n = pc.n;
    std::vector<std::size_t> swaps;
    for (std::size_t i = 0; i < n; ++i) {
        if (F->is_zero(m.at(i, 2 * i + 1))) {
            // normal form guarantees the odd entry is nonzero then
            for (std::size_t r = 0; r < n; ++r) {
                Scalar tmp = m.at(r, 2 * i);
                m.set(r, 2 * i, m.at(r, 2 * i + 1));
                m.set(r, 2 * i + 1, tmp);
            }
            swaps.push_back(i + 1);
        }
    }
    // eliminate even columns down from each diagonal, then scale rows
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = j + 1; i < n; ++i) {
            if (F->is_zero(m.at(i, 2 * j + 1))) continue;
            Scalar factor = F->div(m.at(i, 2 * j + 1), m.at(j, 2 * j + 1));
            for (std::size_t c = 0; c < 2 * n; ++c)
                m.set(i, c, F->sub(m.at(i, c), F->mul(factor, m.at(j, c))));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Scalar inv = F->inv(m.at(i, 2 * i + 1));
        for (std::size_t c = 0; c < 2 * n; ++c) m.set(i, c, F->mul(m.at(i, c), inv));
    }
    Matrix t(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.set(i, j, m.at(i, 2 * j));
    return ExtractResult{std::move(t), std::move(swaps)};
}

std::vector<std::vector<std::size_t>> mds_column_tuples(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(n);
    // depth-first in lexicographic order
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        std::size_t lo = pos == 0 ? 1 : cur[pos - 1] + 1;
        for (std::size_t j = lo; j <= 2 * (pos + 1); ++j) {
            cur[pos] = j;
            if (pos + 1 == n)
                out.push_back(cur);
            else
                rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

MdsVerdict is_mds(const NormalFormPcheck& pc, MdsMethod method) {
    if (pc.d != 2) throw WrongRate("MDS verdicts are defined for rate 1/2");
    MdsVerdict v;
    v.method = method;
    if (method == MdsMethod::Distance) {
        DistanceReport rep = min_rel_distance(generator_from_pcheck(pc), WeightMode::F,
                                              DistMethod::Bruteforce);
        Rat half(1, 2);
        v.mds = rep.delta > half;
        v.delta = rep.delta;
        return v;
    }
    const Matrix& M = pc.m;
    std::vector<std::size_t> all_rows;
    for (std::size_t i = 1; i <= pc.n; ++i) all_rows.push_back(i);
    v.mds = true;
    for (const auto& tuple : mds_column_tuples(pc.n)) {
        ++v.tuples_checked;
        if (M.field()->is_zero(M.submatrix(all_rows, tuple).determinant())) {
            v.mds = false;
            v.witness = tuple;
            break;
        }
    }
    return v;
}

TreeCode mds_generator(const Matrix& t) {
    Verdict scan = nonsingularity_scan(t, ScanMode::Lower);
    if (!scan.holds) throw NotTTN(scan.witness->rows, scan.witness->cols);
    const FieldPtr& F = t.field();
    const std::size_t n = t.rows();
    Matrix s = t.inverse().transpose();
    Matrix gen(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            gen.set(i, 2 * j, s.at(i, j));
            if (i == j) gen.set(i, 2 * j + 1, F->neg(F->one()));
        }
    }
    TreeCode code = TreeCode::from_generator(std::move(gen), 2);
    code.attach_pcheck(interleave_with_identity(t));
    return code;
}

}  // namespace ttc
