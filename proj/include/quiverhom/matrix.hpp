#pragma once

#include "quiverhom/field.hpp"

#include <optional>
#include <vector>

namespace quiverhom {

using RowVec = std::vector<Scalar>;

// Dense row-major matrix over a single exact field. Row vectors act on the
// left throughout the library: x * M maps a 1 x rows vector to 1 x cols.
class Matrix {
public:
    Matrix() : field_(Field::rationals()) {}
    Matrix(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), data_(size_t(rows) * cols, f.zero()) {}

    static Matrix identity(Field f, int n);

    const Field& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

    RowVec row(int r) const;
    void set_row(int r, const RowVec& v);

    Matrix operator*(const Matrix& rhs) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    // Stack rows of `other` below this matrix (same column count).
    Matrix vstack(const Matrix& other) const;

private:
    Field field_;
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_columns;
    int rank() const { return int(pivot_columns.size()); }
};

RrefResult rref(const Matrix& m);

// Linearly independent vectors v with m * v = 0 (column-vector kernel);
// count is cols(m) - rank(m).
std::vector<RowVec> kernel_basis(const Matrix& m);

// Some x with m * x = b (column convention), or nullopt when b is outside
// the column span.
std::optional<RowVec> solve(const Matrix& m, const RowVec& b);

RowVec mat_vec_row(const RowVec& x, const Matrix& m); // x * m, x of length rows

// Row span with membership and coordinate queries; rows of `reduced` are the
// canonical basis.
class RowSpan {
public:
    RowSpan() = default;
    RowSpan(Field f, int width) : field_(f), width_(width), reduced_(f, 0, width) {}
    explicit RowSpan(const Matrix& generators);

    const Field& field() const { return field_; }
    int width() const { return width_; }
    int dim() const { return reduced_.rows(); }
    const Matrix& basis() const { return reduced_; }

    bool contains(const RowVec& v) const;
    // Coordinates of v over basis() rows; nullopt when v is outside the span.
    std::optional<RowVec> coordinates(const RowVec& v) const;
    // Returns true when v was outside the span (and was added).
    bool grow(const RowVec& v);

private:
    Field field_ = Field::rationals();
    int width_ = 0;
    Matrix reduced_; // rref rows, no zero rows
    std::vector<int> pivots_;
};

// Span of `subspace_gens` sitting inside the span of `ambient_gens`: basis of
// the subspace, membership data, and a complement basis inside the ambient
// span.
struct SpanDecomposition {
    RowSpan subspace;
    RowSpan ambient;
    std::vector<RowVec> complement;
};

SpanDecomposition intersect_and_quotient(const std::vector<RowVec>& subspace_gens,
                                         const std::vector<RowVec>& ambient_gens,
                                         Field field, int width);

} // namespace quiverhom
