#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "ghcode/field.hpp"

namespace ghcode {

class MatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over a shared finite field.
class Matrix {
public:
    Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const std::shared_ptr<const Field>& field_ptr() const { return field_; }

    Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Element at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Element> values);
    bool is_zero() const;

    bool operator==(const Matrix& other) const;

private:
    std::shared_ptr<const Field> field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Element> data_;
};

bool same_field(const Field& a, const Field& b);

/// Row rank by Gaussian elimination.
std::size_t rank(const Matrix& mat);

/// Reduced row echelon form; the returned matrix keeps only the nonzero rows.
Matrix rref(const Matrix& mat, std::vector<std::size_t>* pivot_cols = nullptr);

/// a * b^T.
Matrix mul_transpose(const Matrix& a, const Matrix& b);

Matrix stack(const Matrix& a, const Matrix& b);

bool row_space_equal(const Matrix& a, const Matrix& b);

/// Rows form a basis of {x : mat * x = 0}, so that mul_transpose(mat, result) = 0.
Matrix nullspace(const Matrix& mat);

/// Multiplies column j by scale[j]; this is the coordinatewise map c -> scale * c on codewords.
Matrix scale_columns(const Matrix& mat, std::span<const Element> scale);

/// Text format: "p e c rows cols" on the first line, then one line of
/// space-separated encodings per row.
void write_matrix(std::ostream& os, const Matrix& mat);
Matrix read_matrix(std::istream& is);

}  // namespace ghcode
