#include "stratal/linalg.hpp"

#include "stratal/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stratal {

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ConfigError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
    return s;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ConfigError("vector add: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw ConfigError("vector subtract: length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ConfigError("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    if (!columns.empty()) rows = columns.front().size();
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw ConfigError("ragged matrix columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw ConfigError("hstack: row mismatch");
    Matrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw ConfigError("vstack: column mismatch");
    Matrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < top.rows(); ++r) m(r, c) = top(r, c);
        for (std::size_t r = 0; r < bottom.rows(); ++r) m(top.rows() + r, c) = bottom(r, c);
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::select_columns(std::span<const std::size_t> which) const {
    Matrix m(rows_, which.size());
    for (std::size_t k = 0; k < which.size(); ++k)
        for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, which[k]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw ConfigError("matrix-vector: length mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ConfigError("matrix product: shape mismatch");
    Matrix m(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& x = a(r, k);
            if (sgn(x) == 0) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (sgn(b(k, c)) != 0) m(r, c) += x * b(k, c);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ConfigError("matrix sum: shape mismatch");
    Matrix m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c) + b(r, c);
    return m;
}

RowEchelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pick = row;
        while (pick < m.rows() && sgn(m(pick, col)) == 0) ++pick;
        if (pick == m.rows()) continue;
        if (pick != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    RowEchelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
        basis.push_back(std::move(v));
    }
    return column_echelon(Matrix::from_columns(basis, m.cols()));
}

Matrix column_echelon(const Matrix& m) {
    RowEchelon e = rref(m.transpose());
    Matrix t(e.pivots.size(), m.rows());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < m.rows(); ++c) t(r, c) = e.reduced(r, c);
    return t.transpose();
}

Matrix independent_columns(const Matrix& m) {
    auto pivots = rref(m).pivots;
    return m.select_columns(pivots);
}

bool span_contains(const Matrix& span, const Matrix& vectors) {
    if (vectors.cols() == 0) return true;
    if (span.rows() != vectors.rows()) throw ConfigError("span_contains: dimension mismatch");
    return rank(Matrix::hstack(span, vectors)) == rank(span);
}

Vector project_onto_columns(const Matrix& a, const Vector& v, Vector* coefficients) {
    if (a.rows() != v.size()) throw ConfigError("projection: dimension mismatch");
    auto pivots = rref(a).pivots;
    Matrix basis = a.select_columns(pivots);
    // Normal equations on an independent column set: (B^T B) y = B^T v.
    Matrix bt = basis.transpose();
    Matrix gram = bt * basis;
    Vector rhs = bt.apply(v);
    Matrix augmented = Matrix::hstack(gram, Matrix::from_columns({rhs}, gram.rows()));
    RowEchelon e = rref(augmented);
    Vector y(basis.cols());
    for (std::size_t k = 0; k < e.pivots.size(); ++k) y[e.pivots[k]] = e.reduced(k, gram.cols());
    if (coefficients) {
        Vector x(a.cols());
        for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = y[k];
        *coefficients = std::move(x);
    }
    return basis.apply(y);
}

// ---------------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::vector<Column> columns)
    : rows_(rows), columns_(std::move(columns)) {
    for (auto& col : columns_) {
        std::sort(col.begin(), col.end());
        col.erase(std::remove_if(col.begin(), col.end(), [](const Entry& e) { return e.second == 0; }),
                  col.end());
        for (const auto& [r, _] : col)
            if (r < 0 || static_cast<std::size_t>(r) >= rows_) throw ConfigError("sparse matrix: row out of range");
    }
}

SparseMatrix SparseMatrix::select_columns(std::span<const std::size_t> which) const {
    std::vector<Column> cols;
    cols.reserve(which.size());
    for (auto c : which) cols.push_back(columns_.at(c));
    return SparseMatrix(rows_, std::move(cols));
}

SparseMatrix SparseMatrix::select_rows(std::span<const std::size_t> which) const {
    std::vector<std::int32_t> position(rows_, -1);
    for (std::size_t k = 0; k < which.size(); ++k) position.at(which[k]) = static_cast<std::int32_t>(k);
    std::vector<Column> cols;
    cols.reserve(columns_.size());
    for (const auto& col : columns_) {
        Column out;
        for (const auto& [r, v] : col)
            if (position[r] >= 0) out.emplace_back(position[r], v);
        cols.push_back(std::move(out));
    }
    return SparseMatrix(which.size(), std::move(cols));
}

Matrix SparseMatrix::to_dense() const {
    Matrix m(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c]) m(r, c) = static_cast<long>(v);
    return m;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), Entry{static_cast<std::int32_t>(r), std::numeric_limits<std::int64_t>::min()});
    return (it != col.end() && static_cast<std::size_t>(it->first) == r) ? it->second : 0;
}

namespace {

struct Overflow {};

struct CheckedInt {
    using Value = std::int64_t;
    static Value mul(Value a, Value b) {
        Value out;
        if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static Value sub(Value a, Value b) {
        Value out;
        if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
        return out;
    }
    static Value gcd(Value a, Value b) { return std::gcd(a, b); }
    static bool is_zero(const Value& a) { return a == 0; }
    static Value from(std::int64_t v) { return v; }
};

struct BigInt {
    using Value = Integer;
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value gcd(const Value& a, const Value& b) {
        Value g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static bool is_zero(const Value& a) { return sgn(a) == 0; }
    static Value from(std::int64_t v) { return Value(static_cast<long>(v)); }
};

// Column reduction keyed on the lowest nonzero row (the persistence-style
// algorithm). Each reduction step is fraction-free: col <- b*col - a*pivot,
// followed by division by the content of the column.
template <class Ops>
std::size_t reduce_rank(const SparseMatrix& m) {
    using Value = typename Ops::Value;
    using Col = std::vector<std::pair<std::int32_t, Value>>;
    std::vector<Col> reduced;
    reduced.reserve(m.cols());
    std::vector<std::int32_t> pivot_of_row(m.rows(), -1);
    std::size_t rank = 0;
    Col scratch;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Col col;
        col.reserve(m.column(c).size());
        for (const auto& [r, v] : m.column(c)) col.emplace_back(r, Ops::from(v));
        while (!col.empty()) {
            std::int32_t low = col.back().first;
            std::int32_t p = pivot_of_row[low];
            if (p < 0) break;
            const Col& piv = reduced[p];
            Value a = col.back().second;
            Value b = piv.back().second;
            Value g = Ops::gcd(a, b);
            if (!Ops::is_zero(g)) {
                a = a / g;
                b = b / g;
            }
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < col.size() || j < piv.size()) {
                if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
                    scratch.emplace_back(col[i].first, Ops::mul(b, col[i].second));
                    ++i;
                } else if (i == col.size() || piv[j].first < col[i].first) {
                    scratch.emplace_back(piv[j].first, Ops::sub(Value(0), Ops::mul(a, piv[j].second)));
                    ++j;
                } else {
                    Value v = Ops::sub(Ops::mul(b, col[i].second), Ops::mul(a, piv[j].second));
                    if (!Ops::is_zero(v)) scratch.emplace_back(col[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            Value content(0);
            for (const auto& e : scratch) {
                content = Ops::gcd(content, e.second);
                if (content == Value(1)) break;
            }
            if (!Ops::is_zero(content) && content != Value(1))
                for (auto& e : scratch) e.second = e.second / content;
            col.swap(scratch);
        }
        if (!col.empty()) {
            pivot_of_row[col.back().first] = static_cast<std::int32_t>(reduced.size());
            ++rank;
        }
        reduced.push_back(std::move(col));
    }
    return rank;
}

}  // namespace

std::size_t rank(const SparseMatrix& m) {
    try {
        return reduce_rank<CheckedInt>(m);
    } catch (const Overflow&) {
        return reduce_rank<BigInt>(m);
    }
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows()) throw ConfigError("sparse product: shape mismatch");
    std::vector<SparseMatrix::Column> cols;
    cols.reserve(b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<std::int64_t> acc(a.rows(), 0);
        for (const auto& [k, v] : b.column(c))
            for (const auto& [r, w] : a.column(k)) acc[r] += v * w;
        SparseMatrix::Column out;
        for (std::size_t r = 0; r < acc.size(); ++r)
            if (acc[r] != 0) out.emplace_back(static_cast<std::int32_t>(r), acc[r]);
        cols.push_back(std::move(out));
    }
    return SparseMatrix(a.rows(), std::move(cols));
}

}  // namespace stratal
