#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ttc/field.hpp"

namespace ttc {

// Dense matrix of scalars over a Field.  Element access (at/set) is 0-based;
// index-list APIs (submatrix, witnesses) use the paper's 1-based, strictly
// increasing convention.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(const FieldPtr& field, std::size_t n);
    static Matrix from_ints(const FieldPtr& field,
                            const std::vector<std::vector<i64>>& rows);
    static Matrix from_rows(const FieldPtr& field,
                            const std::vector<std::vector<Scalar>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Scalar v);

    // SubMatrix in the paper's notation M[i_1..i_s | j_1..j_s'] with 1-based
    // strictly increasing index lists.
    Matrix submatrix(const std::vector<std::size_t>& row_idx1,
                     const std::vector<std::size_t>& col_idx1) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix negated() const;
    bool operator==(const Matrix& o) const;
    bool is_zero() const;
    Matrix scaled(const Scalar& c) const;

    Scalar determinant() const;  // NotSquare
    std::size_t rank() const;
    // LU without pivoting, U with unit diagonal; SingularLeadingMinor(k) on
    // the first failing leading principal minor.
    std::pair<Matrix, Matrix> lu_factor() const;
    Matrix inverse() const;  // SingularMatrix

    // Reduced row echelon form; pivot column indices (0-based) out.
    Matrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;
    // Rows form the canonical basis of {v : M v = 0}.
    Matrix nullspace() const;

    // Reduce an integral matrix over Q modulo a prime field; NonIntegralFamily
    // if some entry has a denominator.
    Matrix mod_p(const FieldPtr& prime_field) const;

    std::vector<std::vector<std::string>> to_strings() const;

private:
    Scalar& mut(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> entries_;  // row-major
};

// Validates a 1-based strictly increasing index list against a bound.
void check_index_list(const std::vector<std::size_t>& idx1, std::size_t bound);

}  // namespace ttc
