#include "ghcode/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ghcode {

Matrix::Matrix(std::shared_ptr<const Field> field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
    if (!field_) throw MatrixError("matrix needs a field");
}

void Matrix::append_row(std::span<const Element> values) {
    if (values.size() != cols_) throw MatrixError("row length does not match column count");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

bool Matrix::operator==(const Matrix& other) const {
    return same_field(*field_, *other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

bool same_field(const Field& a, const Field& b) {
    return &a == &b || (a.characteristic() == b.characteristic() && a.e() == b.e() && a.c() == b.c() &&
                        a.modulus() == b.modulus());
}

Matrix rref(const Matrix& mat, std::vector<std::size_t>* pivot_cols) {
    const Field& f = mat.field();
    Matrix work = mat;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < work.cols() && lead < work.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < work.rows() && work.at(sel, col).is_zero()) ++sel;
        if (sel == work.rows()) continue;
        if (sel != lead) {
            auto a = work.row(sel);
            auto b = work.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = work.row(lead);
        const Element scale = f.inv(prow[col]);
        for (std::size_t c = col; c < work.cols(); ++c) prow[c] = f.mul(prow[c], scale);
        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r == lead) continue;
            auto other = work.row(r);
            const Element factor = other[col];
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < work.cols(); ++c) {
                if (!prow[c].is_zero()) other[c] = f.sub(other[c], f.mul(factor, prow[c]));
            }
        }
        pivots.push_back(col);
        ++lead;
    }
    Matrix out(mat.field_ptr(), 0, mat.cols());
    for (std::size_t r = 0; r < lead; ++r) out.append_row(work.row(r));
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return out;
}

std::size_t rank(const Matrix& mat) {
    const Field& f = mat.field();
    Matrix work = mat;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < work.cols() && lead < work.rows(); ++col) {
        std::size_t sel = lead;
        while (sel < work.rows() && work.at(sel, col).is_zero()) ++sel;
        if (sel == work.rows()) continue;
        if (sel != lead) {
            auto a = work.row(sel);
            auto b = work.row(lead);
            std::swap_ranges(a.begin(), a.end(), b.begin());
        }
        auto prow = work.row(lead);
        const Element scale = f.inv(prow[col]);
        for (std::size_t c = col; c < work.cols(); ++c) prow[c] = f.mul(prow[c], scale);
        for (std::size_t r = lead + 1; r < work.rows(); ++r) {
            auto other = work.row(r);
            const Element factor = other[col];
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < work.cols(); ++c) {
                if (!prow[c].is_zero()) other[c] = f.sub(other[c], f.mul(factor, prow[c]));
            }
        }
        ++lead;
    }
    return lead;
}

Matrix mul_transpose(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field())) throw MatrixError("matrices live over different fields");
    if (a.cols() != b.cols()) throw MatrixError("column counts differ");
    const Field& f = a.field();
    Matrix out(a.field_ptr(), a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto rb = b.row(j);
            Element acc = f.zero();
            for (std::size_t c = 0; c < a.cols(); ++c) acc = f.add(acc, f.mul(ra[c], rb[c]));
            out.at(i, j) = acc;
        }
    }
    return out;
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field())) throw MatrixError("matrices live over different fields");
    if (a.cols() != b.cols()) throw MatrixError("column counts differ");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (!same_field(a.field(), b.field())) throw MatrixError("matrices live over different fields");
    if (a.cols() != b.cols()) throw MatrixError("column counts differ");
    const std::size_t ra = rank(a);
    if (ra != rank(b)) return false;
    return rank(stack(a, b)) == ra;
}

Matrix nullspace(const Matrix& mat) {
    const Field& f = mat.field();
    std::vector<std::size_t> pivots;
    const Matrix red = rref(mat, &pivots);
    std::vector<bool> is_pivot(mat.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix out(mat.field_ptr(), 0, mat.cols());
    std::vector<Element> vec(mat.cols());
    for (std::size_t free = 0; free < mat.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(vec.begin(), vec.end(), f.zero());
        vec[free] = f.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) vec[pivots[r]] = f.neg(red.at(r, free));
        out.append_row(vec);
    }
    return out;
}

Matrix scale_columns(const Matrix& mat, std::span<const Element> scale) {
    if (scale.size() != mat.cols()) throw MatrixError("scale vector length does not match column count");
    const Field& f = mat.field();
    Matrix out = mat;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        auto row = out.row(r);
        for (std::size_t c = 0; c < out.cols(); ++c) row[c] = f.mul(row[c], scale[c]);
    }
    return out;
}

void write_matrix(std::ostream& os, const Matrix& mat) {
    const Field& f = mat.field();
    os << f.characteristic() << ' ' << f.e() << ' ' << f.c() << ' ' << mat.rows() << ' ' << mat.cols() << '\n';
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        const auto row = mat.row(r);
        for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (c) os << ' ';
            os << row[c].value;
        }
        os << '\n';
    }
}

Matrix read_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw MatrixError("missing matrix header");
    std::istringstream hs(header);
    unsigned p = 0, e = 0, c = 0;
    std::size_t rows = 0, cols = 0;
    if (!(hs >> p >> e >> c >> rows >> cols)) throw MatrixError("malformed matrix header: " + header);
    auto field = Field::create(p, e, c);
    Matrix out(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(is, line)) throw MatrixError("matrix has fewer rows than its header says");
        std::istringstream ls(line);
        for (std::size_t col = 0; col < cols; ++col) {
            std::uint64_t v = 0;
            if (!(ls >> v)) throw MatrixError("row " + std::to_string(r) + " is short");
            out.at(r, col) = field->element(v);
        }
        std::string extra;
        if (ls >> extra) throw MatrixError("row " + std::to_string(r) + " is long");
    }
    return out;
}

}  // namespace ghcode
