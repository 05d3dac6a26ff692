#pragma once

// Finite-dimensional Hilbert complexes
//   H_0 --D_0--> H_1 --D_1--> ... --D_{n-1}--> H_n
// with orthonormal bases, so adjoints are transposes. Every range is closed
// here, so the minimal and maximal extensions of d, delta and the Laplacian
// all coincide, and harmonic forms compute cohomology on the nose.

#include "stratal/complex.hpp"
#include "stratal/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace stratal {

class FiniteHilbertComplex {
public:
    /// differentials[i] is D_i, a dims[i+1] x dims[i] matrix. Gram matrices,
    /// when given, must be identities. Throws ComplexError naming the degree
    /// on a shape mismatch or D_{i+1} D_i != 0.
    static FiniteHilbertComplex validate(std::vector<std::size_t> dims, std::vector<Matrix> differentials,
                                         const std::optional<std::vector<Matrix>>& gram = std::nullopt);

    /// Index of the last space.
    int top() const noexcept { return static_cast<int>(dims_.size()) - 1; }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t dim(int i) const { return i < 0 || i > top() ? 0 : dims_[i]; }
    /// D_i; zero maps of the right shape for i = -1 and i = top().
    Matrix differential(int i) const;
    Matrix laplacian(int i) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<Matrix> d_;
};

std::vector<long> cohomology_dims(const FiniteHilbertComplex& c);

/// dim(ker D_i ∩ ker D_{i-1}^T).
std::vector<long> harmonic_dims(const FiniteHilbertComplex& c);

/// Canonical basis of ker D_i ∩ ker D_{i-1}^T.
Matrix harmonic_basis(const FiniteHilbertComplex& c, int i);

struct KodairaParts {
    Vector harmonic;
    Vector exact;    ///< D_{i-1} a
    Vector coexact;  ///< D_i^T b
    Vector a;
    Vector b;
};

/// Orthogonal splitting of v in H_i. Throws DomainError on a length mismatch.
KodairaParts kodaira_decompose(const FiniteHilbertComplex& c, int i, const Vector& v);

struct DualComplexReport {
    FiniteHilbertComplex dual;  ///< H'_j = H_{n-j}, D'_j = D_{n-j-1}^T
    std::vector<long> cohomology;
    std::vector<long> dual_cohomology;
    bool passed = false;        ///< cohomology[i] == dual_cohomology[n-i]
};

DualComplexReport dual_complex(const FiniteHilbertComplex& c);

/// Index of the map even -> odd given by D_{2i} + D_{2i-1}^T, from the ranks
/// of the assembled block operator.
long index_even_odd(const FiniteHilbertComplex& c);

/// Cochain complex of a simplicial complex: D_i is the transpose of the
/// boundary from degree i+1.
FiniteHilbertComplex cochain_complex(const FilteredComplex& k);

/// Seeded random complex with the given dimensions: D_{n-1} random, then each
/// lower D_i is a random matrix with its columns projected onto ker D_{i+1}.
FiniteHilbertComplex random_complex(const std::vector<std::size_t>& dims, std::uint64_t seed);

}  // namespace stratal
