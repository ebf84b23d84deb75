#pragma once

#include <vector>

#include "ttc/matrix.hpp"
#include "ttc/poly.hpp"

namespace ttc {

// Matrix with polynomial entries (used for the symbolic W_n(x) family).
// Determinants come in two independent routes: fraction-free (Bareiss)
// elimination and cofactor expansion.
class PolyMatrix {
public:
    PolyMatrix(FieldPtr base_field, std::size_t rows, std::size_t cols);

    const FieldPtr& base_field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    // 1-based strictly increasing index lists, as in Matrix::submatrix.
    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx1,
                         const std::vector<std::size_t>& col_idx1) const;

    Poly determinant_bareiss() const;   // NotSquare
    Poly determinant_cofactor() const;  // NotSquare; TooLarge for n > 8

    // Substitute x by the class of x in F_p[x]/(f) (coefficient field must
    // share the characteristic).
    Matrix eval_in(const FieldPtr& ext_field) const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
};

}  // namespace ttc
