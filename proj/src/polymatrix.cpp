#include "ttc/polymatrix.hpp"

#include "ttc/zpoly.hpp"

namespace ttc {

PolyMatrix::PolyMatrix(FieldPtr base_field, std::size_t rows, std::size_t cols)
    : field_(std::move(base_field)), rows_(rows), cols_(cols),
      entries_(rows * cols, Poly(field_)) {
    if (rows == 0 || cols == 0) throw DomainError("matrix dimensions must be positive");
}

void PolyMatrix::set(std::size_t i, std::size_t j, Poly p) {
    check_same_field(field_, p.field());
    entries_[i * cols_ + j] = std::move(p);
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& row_idx1,
                                 const std::vector<std::size_t>& col_idx1) const {
    check_index_list(row_idx1, rows_);
    check_index_list(col_idx1, cols_);
    PolyMatrix m(field_, row_idx1.size(), col_idx1.size());
    for (std::size_t i = 0; i < row_idx1.size(); ++i)
        for (std::size_t j = 0; j < col_idx1.size(); ++j)
            m.set(i, j, at(row_idx1[i] - 1, col_idx1[j] - 1));
    return m;
}

// One-step Bareiss: a_ij <- (a_kk a_ij - a_ik a_kj) / prev_pivot, divisions
// exact by construction.  Row swaps track the sign.
Poly PolyMatrix::determinant_bareiss() const {
    if (rows_ != cols_) throw NotSquare();
    const std::size_t n = rows_;
    std::vector<Poly> a = entries_;
    auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
    bool neg = false;
    Poly prev = Poly::constant(field_, field_->one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[idx(piv, k)].is_zero()) ++piv;
        if (piv == n) return Poly(field_);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[idx(piv, j)], a[idx(k, j)]);
            neg = !neg;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a[idx(k, k)] * a[idx(i, j)] - a[idx(i, k)] * a[idx(k, j)];
                a[idx(i, j)] = Poly::exact_div(num, prev);
            }
            a[idx(i, k)] = Poly(field_);
        }
        prev = a[idx(k, k)];
    }
    Poly det = a[idx(n - 1, n - 1)];
    return neg ? -det : det;
}

Poly PolyMatrix::determinant_cofactor() const {
    if (rows_ != cols_) throw NotSquare();
    if (rows_ > 8) throw TooLarge("cofactor expansion limited to n <= 8");
    const std::size_t n = rows_;
    if (n == 1) return at(0, 0);
    Poly det(field_);
    std::vector<std::size_t> rest;
    for (std::size_t j = 1; j <= n; ++j) rest.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, 0).is_zero()) continue;
        std::vector<std::size_t> rows1;
        for (std::size_t r = 1; r <= n; ++r)
            if (r != i + 1) rows1.push_back(r);
        std::vector<std::size_t> cols1(rest.begin() + 1, rest.end());
        Poly minor = submatrix(rows1, cols1).determinant_cofactor();
        Poly term = at(i, 0) * minor;
        det = (i % 2 == 0) ? det + term : det - term;
    }
    return det;
}

Matrix PolyMatrix::eval_in(const FieldPtr& ext_field) const {
    if (ext_field->kind() != FieldKind::Extension ||
        ext_field->characteristic() != field_->characteristic())
        throw FieldMismatch("evaluation field must be an extension of the coefficient field");
    const u64 p = field_->characteristic();
    Matrix m(ext_field, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            zp::Z z;
            const Poly& e = at(i, j);
            for (std::size_t t = 0; t < e.coeffs().size(); ++t)
                z.push_back(std::get<u64>(e.coeffs()[t]) % p);
            zp::trim(z);
            z = zp::mod(std::move(z), ext_field->modulus(), p);
            z.resize(ext_field->degree(), 0);
            m.set(i, j, ExtElem(z));
        }
    return m;
}

}  // namespace ttc
