#include "ttc/ttn.hpp"

#include <algorithm>
#include <thread>

#include "ttc/families.hpp"
#include "ttc/modarith.hpp"
#include "ttc/rng.hpp"

namespace ttc {

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    // c is 1-based strictly increasing of fixed size s; lexicographic successor
    std::size_t s = c.size();
    for (std::size_t i = s; i-- > 0;) {
        if (c[i] < n - (s - 1 - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

bool admissible(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                ScanMode mode) {
    if (mode == ScanMode::All) return true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (mode == ScanMode::Lower && cols[r] > rows[r]) return false;
        if (mode == ScanMode::Upper && cols[r] < rows[r]) return false;
    }
    return true;
}

}  // namespace

void for_each_admissible(std::size_t nrows, std::size_t ncols, ScanMode mode,
                         const std::function<bool(const IndexPair&)>& fn) {
    std::size_t smax = std::min(nrows, ncols);
    for (std::size_t s = 1; s <= smax; ++s) {
        std::vector<std::size_t> rows(s);
        for (std::size_t i = 0; i < s; ++i) rows[i] = i + 1;
        do {
            std::vector<std::size_t> cols(s);
            for (std::size_t i = 0; i < s; ++i) cols[i] = i + 1;
            do {
                if (!admissible(rows, cols, mode)) continue;
                if (!fn(IndexPair{rows, cols})) return;
            } while (next_combination(cols, ncols));
        } while (next_combination(rows, nrows));
    }
}

std::vector<IndexPair> admissible_tuples(std::size_t n, ScanMode mode) {
    if (n == 0) throw DomainError("n must be at least 1");
    std::vector<IndexPair> out;
    for_each_admissible(n, n, mode, [&](const IndexPair& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

Verdict nonsingularity_scan(const Matrix& m, ScanMode mode, unsigned threads) {
    if (mode != ScanMode::All && m.rows() != m.cols()) throw NotSquare();
    std::vector<IndexPair> pairs;
    for_each_admissible(m.rows(), m.cols(), mode, [&](const IndexPair& p) {
        pairs.push_back(p);
        return true;
    });

    auto singular_at = [&](std::size_t idx) {
        const IndexPair& p = pairs[idx];
        return m.field()->is_zero(m.submatrix(p.rows, p.cols).determinant());
    };

    std::size_t first_fail = pairs.size();
    if (threads <= 1) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (singular_at(i)) {
                first_fail = i;
                break;
            }
        }
    } else {
        unsigned nt = std::min<std::size_t>(threads, pairs.size() ? pairs.size() : 1);
        std::vector<std::size_t> local(nt, pairs.size());
        std::vector<std::thread> pool;
        std::size_t chunk = (pairs.size() + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            pool.emplace_back([&, t]() {
                std::size_t lo = t * chunk;
                std::size_t hi = std::min(pairs.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) {
                    if (singular_at(i)) {
                        local[t] = i;
                        break;
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        for (std::size_t v : local) first_fail = std::min(first_fail, v);
    }

    Verdict v;
    if (first_fail == pairs.size()) {
        v.holds = true;
        v.minors_checked = pairs.size();
    } else {
        v.holds = false;
        v.witness = pairs[first_fail];
        v.minors_checked = first_fail + 1;
    }
    return v;
}

CryerReport lu_cryer_check(const Matrix& m) {
    auto [L, U] = m.lu_factor();
    CryerReport r;
    r.lower = nonsingularity_scan(L, ScanMode::Lower);
    r.upper = nonsingularity_scan(U, ScanMode::Upper);
    r.holds = r.lower.holds && r.upper.holds;
    return r;
}

Verdict lu_band_check(const Matrix& m) {
    auto [L, U] = m.lu_factor();
    const std::size_t n = L.rows();
    Verdict v;
    v.holds = true;
    v.minors_checked = 0;
    for (std::size_t k = 1; k <= n && v.holds; ++k) {
        for (std::size_t j = 1; j + k - 1 <= n && v.holds; ++j) {
            std::vector<std::size_t> cols(k);
            for (std::size_t t = 0; t < k; ++t) cols[t] = j + t;
            // rows i_1 < ... < i_k with j <= i_1; (j..j+k-1) is the least one
            // and lexicographic successors keep i_1 >= j
            std::vector<std::size_t> rows(k);
            for (std::size_t t = 0; t < k; ++t) rows[t] = j + t;
            do {
                ++v.minors_checked;
                if (L.field()->is_zero(L.submatrix(rows, cols).determinant())) {
                    v.holds = false;
                    v.witness = IndexPair{rows, cols};
                    break;
                }
            } while (next_combination(rows, n));
        }
    }
    return v;
}

namespace {

// Small-rational palette for the counterexample search, ordered roughly by
// size.  Any assignment avoiding finitely many linear conditions works, so a
// seeded draw from this palette succeeds almost immediately.
const std::vector<Rat>& rational_palette() {
    static const std::vector<Rat> pal = [] {
        std::vector<Rat> v;
        for (int num = -6; num <= 6; ++num)
            for (int den = 1; den <= 3; ++den) {
                Rat r(num, den);
                r.canonicalize();
                if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
            }
        return v;
    }();
    return pal;
}

}  // namespace

CounterexampleResult counterexample_search(u64 seed, u64 bound) {
    FieldPtr Q = Field::rationals();
    const auto& pal = rational_palette();
    const IndexPair expected{{3, 4}, {1, 3}};
    for (u64 t = 0; t < bound; ++t) {
        SplitMix64 rng(mix_seed(seed, t));
        Rat a = pal[rng.below(pal.size())], b = pal[rng.below(pal.size())];
        Rat c = pal[rng.below(pal.size())], d = pal[rng.below(pal.size())];
        Rat e = pal[rng.below(pal.size())], f = pal[rng.below(pal.size())];
        Matrix m = Matrix::from_rows(
            Q, {{Rat(1), a, b, c},
                {Rat(1), Rat(2) + a, Rat(2) + b, d},
                {Rat(2), Rat(3) + 2 * a, Rat(5) + 2 * b, e},
                {Rat(3), Rat(4) + 3 * a, Rat(7) + 3 * b, f}});
        Verdict tns = nonsingularity_scan(m, ScanMode::All);
        if (!tns.holds) continue;
        Matrix L = m.lu_factor().first;
        Verdict lower = nonsingularity_scan(L, ScanMode::Lower);
        if (lower.holds || !(*lower.witness == expected)) continue;  // cannot happen for TNS m
        CounterexampleResult r{std::move(m), std::move(L), tns, lower, t + 1};
        return r;
    }
    throw SearchExhausted(bound);
}

ScanReport scan_primes(const Matrix& integral, u64 pmin, u64 pmax, ScanMode mode,
                       unsigned threads) {
    if (integral.field()->kind() != FieldKind::Rationals)
        throw DomainError("scan_primes expects an integer matrix over Q");
    for (std::size_t i = 0; i < integral.rows(); ++i)
        for (std::size_t j = 0; j < integral.cols(); ++j)
            if (std::get<Rat>(integral.at(i, j)).get_den() != 1) throw NonIntegralFamily();

    std::vector<u64> primes;
    for (u64 p = std::max<u64>(pmin, 2); p <= pmax; ++p)
        if (is_prime_u64(p)) primes.push_back(p);

    ScanReport report;
    report.results.resize(primes.size());
    auto run_one = [&](std::size_t i) {
        FieldPtr Fp = Field::prime(primes[i]);
        report.results[i] = PrimeResult{primes[i], nonsingularity_scan(integral.mod_p(Fp), mode)};
    };
    if (threads <= 1 || primes.size() <= 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) run_one(i);
    } else {
        unsigned nt = static_cast<unsigned>(std::min<std::size_t>(threads, primes.size()));
        std::vector<std::thread> pool;
        std::size_t chunk = (primes.size() + nt - 1) / nt;
        for (unsigned t = 0; t < nt; ++t) {
            pool.emplace_back([&, t]() {
                std::size_t lo = t * chunk;
                std::size_t hi = std::min(primes.size(), lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) run_one(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& r : report.results) {
        if (r.verdict.holds) {
            report.minimal_passing = r.p;
            break;
        }
    }
    return report;
}

}  // namespace ttc
