#include "ttc/matrix.hpp"

namespace ttc {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
    if (entries_.size() != rows_ * cols_)
        throw DomainError("entry count does not match matrix shape");
    for (const auto& e : entries_) field_->check(e);
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.mut(i, i) = field->one();
    return m;
}

Matrix Matrix::from_ints(const FieldPtr& field, const std::vector<std::vector<i64>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("matrix dimensions must be positive");
    Matrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DomainError("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.mut(i, j) = field->from_int(rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DomainError("matrix dimensions must be positive");
    Matrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw DomainError("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) {
            field->check(rows[i][j]);
            m.mut(i, j) = rows[i][j];
        }
    }
    return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
    field_->check(v);
    mut(i, j) = std::move(v);
}

void check_index_list(const std::vector<std::size_t>& idx1, std::size_t bound) {
    if (idx1.empty()) throw IndexOutOfRange("index list must be nonempty");
    std::size_t prev = 0;
    for (std::size_t v : idx1) {
        if (v < 1 || v > bound)
            throw IndexOutOfRange("index " + std::to_string(v) + " outside [1," +
                                  std::to_string(bound) + "]");
        if (v <= prev) throw NonIncreasingIndices();
        prev = v;
    }
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& row_idx1,
                         const std::vector<std::size_t>& col_idx1) const {
    check_index_list(row_idx1, rows_);
    check_index_list(col_idx1, cols_);
    Matrix m(field_, row_idx1.size(), col_idx1.size());
    for (std::size_t i = 0; i < row_idx1.size(); ++i)
        for (std::size_t j = 0; j < col_idx1.size(); ++j)
            m.mut(i, j) = at(row_idx1[i] - 1, col_idx1[j] - 1);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.mut(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (cols_ != o.rows_) throw DomainError("inner dimensions do not match");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (field_->is_zero(at(i, k))) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.mut(i, j) = field_->add(m.at(i, j), field_->mul(at(i, k), o.at(k, j)));
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = field_->add(entries_[i], o.entries_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_field(field_, o.field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = field_->sub(entries_[i], o.entries_[i]);
    return m;
}

Matrix Matrix::negated() const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->neg(entries_[i]);
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m(field_, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = field_->mul(entries_[i], c);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (!field_->same(*o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!field_->eq(entries_[i], o.entries_[i])) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!field_->is_zero(e)) return false;
    return true;
}

Scalar Matrix::determinant() const {
    if (rows_ != cols_) throw NotSquare();
    const std::size_t n = rows_;
    std::vector<Scalar> a = entries_;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    bool neg = false;
    Scalar det = field_->one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && field_->is_zero(a[idx(piv, k)])) ++piv;
        if (piv == n) return field_->zero();
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[idx(piv, j)], a[idx(k, j)]);
            neg = !neg;
        }
        det = field_->mul(det, a[idx(k, k)]);
        Scalar inv = field_->inv(a[idx(k, k)]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (field_->is_zero(a[idx(i, k)])) continue;
            Scalar factor = field_->mul(a[idx(i, k)], inv);
            for (std::size_t j = k + 1; j < n; ++j)
                a[idx(i, j)] = field_->sub(a[idx(i, j)], field_->mul(factor, a[idx(k, j)]));
            a[idx(i, k)] = field_->zero();
        }
    }
    return neg ? field_->neg(det) : det;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivot_cols) const {
    Matrix m = *this;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && field_->is_zero(m.at(piv, c))) ++piv;
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.mut(piv, j), m.mut(r, j));
        Scalar inv = field_->inv(m.at(r, c));
        for (std::size_t j = c; j < cols_; ++j) m.mut(r, j) = field_->mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || field_->is_zero(m.at(i, c))) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < cols_; ++j)
                m.mut(i, j) = field_->sub(m.at(i, j), field_->mul(factor, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return m;
}

std::size_t Matrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::pair<Matrix, Matrix> Matrix::lu_factor() const {
    if (rows_ != cols_) throw NotSquare();
    const std::size_t n = rows_;
    Matrix L(field_, n, n);
    Matrix U = Matrix::identity(field_, n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k; i < n; ++i) {
            Scalar s = at(i, k);
            for (std::size_t t = 0; t < k; ++t)
                s = field_->sub(s, field_->mul(L.at(i, t), U.at(t, k)));
            L.mut(i, k) = std::move(s);
        }
        if (field_->is_zero(L.at(k, k))) throw SingularLeadingMinor(k + 1);
        Scalar pinv = field_->inv(L.at(k, k));
        for (std::size_t j = k + 1; j < n; ++j) {
            Scalar s = at(k, j);
            for (std::size_t t = 0; t < k; ++t)
                s = field_->sub(s, field_->mul(L.at(k, t), U.at(t, j)));
            U.mut(k, j) = field_->mul(s, pinv);
        }
    }
    return {L, U};
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw NotSquare();
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.mut(i, j) = at(i, j);
        aug.mut(i, n + i) = field_->one();
    }
    std::vector<std::size_t> pivots;
    Matrix r = aug.rref(&pivots);
    if (pivots.size() < n || pivots[n - 1] >= n) throw SingularMatrix();
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.mut(i, j) = r.at(i, n + j);
    return inv;
}

Matrix Matrix::nullspace() const {
    std::vector<std::size_t> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t dim = cols_ - pivots.size();
    if (dim == 0)
        throw RankDeficient("nullspace is trivial");
    Matrix basis(field_, dim, cols_);
    std::size_t b = 0;
    for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
        if (is_pivot[free_c]) continue;
        basis.mut(b, free_c) = field_->one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            basis.mut(b, pivots[pr]) = field_->neg(r.at(pr, free_c));
        ++b;
    }
    return basis;
}

Matrix Matrix::mod_p(const FieldPtr& prime_field) const {
    if (field_->kind() != FieldKind::Rationals)
        throw DomainError("mod_p expects a matrix over Q");
    if (prime_field->kind() != FieldKind::Prime)
        throw DomainError("mod_p target must be a prime field");
    Matrix m(prime_field, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& q = std::get<Rat>(at(i, j));
            if (q.get_den() != 1) throw NonIntegralFamily();
            m.mut(i, j) = prime_field->parse(q.get_num().get_str());
        }
    return m;
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i][j] = field_->to_string(at(i, j));
    return out;
}

}  // namespace ttc
