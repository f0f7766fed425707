#ifndef HOPFINV_MATRIX_HPP
#define HOPFINV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hopfinv/field.hpp"

namespace hopfinv {

/// Dense matrix over an exact field. Row vectors double as coordinate
/// vectors with respect to the fixed word order.
class Matrix {
  public:
    Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const FieldSpec& field, std::size_t n);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_rows(const Matrix& other);
    Matrix multiply(const Matrix& rhs) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const; // M * v

    bool operator==(const Matrix& rhs) const;

    std::size_t rank() const;
    bool is_invertible() const; // square and full rank
    bool is_scalar() const;     // lambda * I (including 0)

    /// Basis of {v : Mv = 0}, one vector per row. Free-column construction:
    /// each vector carries a unit coordinate at its free column, vanishes at
    /// the other free columns, and the free columns strictly increase. This
    /// is the reduced echelon normal form taken against the reversed
    /// coordinate order (trailing pivots equal to 1).
    Matrix kernel_basis() const;

    /// Canonical basis of the row space, in the same trailing-pivot reduced
    /// form; any two row-equivalent matrices produce identical output.
    Matrix row_space_basis() const;

  private:
    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

} // namespace hopfinv

#endif
