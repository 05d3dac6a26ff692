#pragma once

#include "stratal/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace stratal {

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Dense row-major matrix over Q. Sized for the small spaces handled by the
/// Hilbert-complex lab and for explicit chain bases; boundary ranks of whole
/// complexes go through SparseMatrix instead.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Throws ConfigError if the rows are ragged. `cols` is used when `rows` is empty.
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows = 0);
    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    Matrix select_columns(std::span<const std::size_t> which) const;
    Matrix transpose() const;
    Vector apply(const Vector& v) const;
    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;                    ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of ker(m), one column per free variable of the RREF. The basis is in
/// reduced column echelon form, so equal kernels give equal matrices.
Matrix kernel_basis(const Matrix& m);

/// Canonical basis of the column span: reduced column echelon form with the
/// zero columns removed.
Matrix column_echelon(const Matrix& m);

/// Columns of `m` that form a basis of its column span (pivot columns).
Matrix independent_columns(const Matrix& m);

/// True iff every column of `vectors` lies in the column span of `span`.
bool span_contains(const Matrix& span, const Matrix& vectors);

/// Orthogonal projection of v onto the column span of `a` (standard inner
/// product). When `coefficients` is non-null it receives x with a*x equal to
/// the projection.
Vector project_onto_columns(const Matrix& a, const Vector& v, Vector* coefficients = nullptr);

/// Sparse integer matrix stored by columns; rows in each column are strictly
/// increasing. Boundary matrices of simplicial complexes have entries +-1.
class SparseMatrix {
public:
    using Entry = std::pair<std::int32_t, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::vector<Column> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const Column& column(std::size_t c) const { return columns_[c]; }

    SparseMatrix select_columns(std::span<const std::size_t> which) const;
    /// Keeps the listed rows (in the given order) and renumbers them 0..k-1.
    SparseMatrix select_rows(std::span<const std::size_t> which) const;
    Matrix to_dense() const;
    std::int64_t at(std::size_t r, std::size_t c) const;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// Exact rank over Q by fraction-free column reduction. Runs on checked 64-bit
/// arithmetic and restarts on GMP integers if any intermediate overflows.
std::size_t rank(const SparseMatrix& m);

/// Product a*b (both sparse); used for d∘d = 0 checks.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace stratal
