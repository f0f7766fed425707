#include "hopfinv/matrix.hpp"

#include <algorithm>

#include "hopfinv/error.hpp"

namespace hopfinv {

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Scalar::one(field);
    return m;
}

void Matrix::append_rows(const Matrix& other) {
    if (other.cols_ != cols_)
        throw Error(ErrorCode::Internal, "append_rows: column counts differ");
    if (other.field_ != field_)
        throw Error(ErrorCode::FieldMismatch, "append_rows: fields differ");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw Error(ErrorCode::Internal, "multiply: shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Scalar& b = rhs.at(k, j);
                if (!b.is_zero())
                    out.at(i, j) = out.at(i, j) + a * b;
            }
        }
    return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_)
        throw Error(ErrorCode::Internal, "apply: length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                out[i] = out[i] + at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           data_ == rhs.data_;
}

namespace {

// In-place Gauss-Jordan with leftmost pivots; returns the pivot columns in
// order. Zero rows end up at the bottom.
std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m.at(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(row, j));
        const Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            const Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t Matrix::rank() const {
    Matrix copy = *this;
    return rref_in_place(copy).size();
}

bool Matrix::is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
}

bool Matrix::is_scalar() const {
    if (rows_ != cols_ || rows_ == 0)
        return false;
    const Scalar& d = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? at(i, j) != d : !at(i, j).is_zero())
                return false;
        }
    return true;
}

Matrix Matrix::kernel_basis() const {
    Matrix red = *this;
    const std::vector<std::size_t> pivots = rref_in_place(red);

    std::vector<std::size_t> free_cols;
    {
        std::size_t next_pivot = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (next_pivot < pivots.size() && pivots[next_pivot] == c)
                ++next_pivot;
            else
                free_cols.push_back(c);
        }
    }

    // One vector per free column: unit coordinate there, solved pivot
    // coordinates elsewhere. Rows come out with strictly increasing unit
    // positions, each eliminated from the other rows.
    Matrix out(field_, free_cols.size(), cols_);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        out.at(k, f) = Scalar::one(field_);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            out.at(k, pivots[i]) = -red.at(i, f);
    }
    return out;
}

Matrix Matrix::row_space_basis() const {
    Matrix work = *this;
    // Gauss-Jordan against the reversed column order: pivot on the trailing
    // coordinate so that kernel bases and span bases share one normal form.
    std::vector<std::pair<std::size_t, std::size_t>> pivot_of_row; // (pivot col, row)
    std::vector<bool> used(work.rows(), false);
    for (std::size_t rc = work.cols(); rc > 0; --rc) {
        const std::size_t col = rc - 1;
        std::size_t sel = work.rows();
        for (std::size_t i = 0; i < work.rows(); ++i)
            if (!used[i] && !work.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == work.rows())
            continue;
        used[sel] = true;
        const Scalar inv = work.at(sel, col).inverse();
        for (std::size_t j = 0; j < work.cols(); ++j)
            work.at(sel, j) = work.at(sel, j) * inv;
        for (std::size_t i = 0; i < work.rows(); ++i) {
            if (i == sel || work.at(i, col).is_zero())
                continue;
            const Scalar factor = work.at(i, col);
            for (std::size_t j = 0; j < work.cols(); ++j)
                work.at(i, j) = work.at(i, j) - factor * work.at(sel, j);
        }
        pivot_of_row.emplace_back(col, sel);
    }
    std::sort(pivot_of_row.begin(), pivot_of_row.end());
    Matrix out(field_, pivot_of_row.size(), cols_);
    for (std::size_t k = 0; k < pivot_of_row.size(); ++k)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(k, j) = work.at(pivot_of_row[k].second, j);
    return out;
}

} // namespace hopfinv
