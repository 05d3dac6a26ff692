#include "stratal/hilbert.hpp"

#include "stratal/errors.hpp"

#include <algorithm>
#include <random>

namespace stratal {

FiniteHilbertComplex FiniteHilbertComplex::validate(std::vector<std::size_t> dims, std::vector<Matrix> differentials,
                                                    const std::optional<std::vector<Matrix>>& gram) {
    if (dims.empty()) throw ComplexError(0, "a complex needs at least one space");
    if (differentials.size() + 1 != dims.size())
        throw ComplexError(static_cast<int>(differentials.size()),
                           "expected " + std::to_string(dims.size() - 1) + " differentials, got " +
                               std::to_string(differentials.size()));
    for (std::size_t i = 0; i < differentials.size(); ++i) {
        const Matrix& d = differentials[i];
        if (d.rows() != dims[i + 1] || d.cols() != dims[i])
            throw ComplexError(static_cast<int>(i), "D is " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                                        ", expected " + std::to_string(dims[i + 1]) + "x" +
                                                        std::to_string(dims[i]));
    }
    if (gram) {
        if (gram->size() != dims.size()) throw ConfigError("one Gram matrix per space is required");
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (!((*gram)[i] == Matrix::identity(dims[i])))
                throw ConfigError("only identity inner products are supported (space " + std::to_string(i) + ")");
    }
    for (std::size_t i = 0; i + 1 < differentials.size(); ++i)
        if (!(differentials[i + 1] * differentials[i]).is_zero())
            throw ComplexError(static_cast<int>(i), "D_" + std::to_string(i + 1) + " D_" + std::to_string(i) + " != 0");
    FiniteHilbertComplex c;
    c.dims_ = std::move(dims);
    c.d_ = std::move(differentials);
    return c;
}

Matrix FiniteHilbertComplex::differential(int i) const {
    if (i >= 0 && i < top()) return d_[i];
    return Matrix(dim(i + 1), dim(i));
}

Matrix FiniteHilbertComplex::laplacian(int i) const {
    Matrix d = differential(i);
    Matrix prev = differential(i - 1);
    return d.transpose() * d + prev * prev.transpose();
}

std::vector<long> cohomology_dims(const FiniteHilbertComplex& c) {
    std::vector<long> out(c.top() + 1);
    for (int i = 0; i <= c.top(); ++i)
        out[i] = static_cast<long>(c.dim(i)) - static_cast<long>(rank(c.differential(i))) -
                 static_cast<long>(rank(c.differential(i - 1)));
    return out;
}

Matrix harmonic_basis(const FiniteHilbertComplex& c, int i) {
    return kernel_basis(Matrix::vstack(c.differential(i), c.differential(i - 1).transpose()));
}

std::vector<long> harmonic_dims(const FiniteHilbertComplex& c) {
    std::vector<long> out(c.top() + 1);
    for (int i = 0; i <= c.top(); ++i) out[i] = static_cast<long>(harmonic_basis(c, i).cols());
    return out;
}

KodairaParts kodaira_decompose(const FiniteHilbertComplex& c, int i, const Vector& v) {
    if (i < 0 || i > c.top()) throw DomainError("degree " + std::to_string(i) + " outside the complex");
    if (v.size() != c.dim(i))
        throw DomainError("vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(c.dim(i)));
    KodairaParts parts;
    parts.exact = project_onto_columns(c.differential(i - 1), v, &parts.a);
    parts.coexact = project_onto_columns(c.differential(i).transpose(), v, &parts.b);
    parts.harmonic = v - parts.exact - parts.coexact;
    return parts;
}

DualComplexReport dual_complex(const FiniteHilbertComplex& c) {
    const int n = c.top();
    std::vector<std::size_t> dims(n + 1);
    std::vector<Matrix> d;
    for (int j = 0; j <= n; ++j) dims[j] = c.dim(n - j);
    for (int j = 0; j < n; ++j) d.push_back(c.differential(n - j - 1).transpose());
    DualComplexReport r{FiniteHilbertComplex::validate(std::move(dims), std::move(d)), {}, {}, false};
    r.cohomology = cohomology_dims(c);
    r.dual_cohomology = cohomology_dims(r.dual);
    r.passed = true;
    for (int i = 0; i <= n; ++i)
        if (r.cohomology[i] != r.dual_cohomology[n - i]) r.passed = false;
    return r;
}

long index_even_odd(const FiniteHilbertComplex& c) {
    const int n = c.top();
    std::vector<std::size_t> offset(n + 2, 0);
    std::size_t even = 0, odd = 0;
    for (int i = 0; i <= n; ++i) {
        std::size_t& total = i % 2 == 0 ? even : odd;
        offset[i] = total;
        total += c.dim(i);
    }
    Matrix block(odd, even);
    for (int i = 0; i <= n; i += 2) {
        if (i + 1 <= n) {
            Matrix d = c.differential(i);
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t col = 0; col < d.cols(); ++col) block(offset[i + 1] + r, offset[i] + col) += d(r, col);
        }
        if (i >= 1) {
            Matrix dt = c.differential(i - 1).transpose();
            for (std::size_t r = 0; r < dt.rows(); ++r)
                for (std::size_t col = 0; col < dt.cols(); ++col)
                    block(offset[i - 1] + r, offset[i] + col) += dt(r, col);
        }
    }
    long rk = static_cast<long>(rank(block));
    long kernel = static_cast<long>(even) - rk;
    long cokernel = static_cast<long>(odd) - rk;
    return kernel - cokernel;
}

FiniteHilbertComplex cochain_complex(const FilteredComplex& k) {
    const int n = k.dimension();
    std::vector<std::size_t> dims(n + 1);
    std::vector<Matrix> d;
    for (int i = 0; i <= n; ++i) dims[i] = k.count(i);
    for (int i = 0; i < n; ++i) d.push_back(boundary_matrix(k, i + 1).to_dense().transpose());
    return FiniteHilbertComplex::validate(std::move(dims), std::move(d));
}

FiniteHilbertComplex random_complex(const std::vector<std::size_t>& dims, std::uint64_t seed) {
    if (dims.empty()) throw DomainError("random complex needs at least one space");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::bernoulli_distribution sparse(0.35);
    auto random_matrix = [&](std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t col = 0; col < cols; ++col)
                if (!sparse(rng)) m(r, col) = entry(rng);
        return m;
    };
    // Half the candidates are products through a random inner dimension, so
    // ranks below the maximum (and nonzero cohomology) show up often.
    std::bernoulli_distribution low_rank(0.5);
    auto candidate_matrix = [&](std::size_t rows, std::size_t cols) {
        if (!low_rank(rng)) return random_matrix(rows, cols);
        std::uniform_int_distribution<std::size_t> inner(0, std::min(rows, cols));
        std::size_t k = inner(rng);
        return random_matrix(rows, k) * random_matrix(k, cols);
    };
    const int n = static_cast<int>(dims.size()) - 1;
    std::vector<Matrix> d(n);
    for (int i = n - 1; i >= 0; --i) {
        Matrix candidate = candidate_matrix(dims[i + 1], dims[i]);
        if (i == n - 1) {
            d[i] = std::move(candidate);
            continue;
        }
        Matrix kernel = kernel_basis(d[i + 1]);
        Matrix projected(dims[i + 1], dims[i]);
        for (std::size_t col = 0; col < dims[i]; ++col) {
            Vector p = project_onto_columns(kernel, candidate.column(col));
            for (std::size_t r = 0; r < p.size(); ++r) projected(r, col) = p[r];
        }
        d[i] = std::move(projected);
    }
    return FiniteHilbertComplex::validate(dims, std::move(d));
}

}  // namespace stratal
